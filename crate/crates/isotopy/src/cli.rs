//! Command-line interface.
//!
//! Exit status: 0 success, 1 verification failure, 2 usage, parse or IO
//! error, 3 component cap exceeded.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use isotopy_core::constructions::{appendix_catalog, build_symmetric_family, build_td};
use isotopy_core::enumerate::enumerate_fillings;
use isotopy_core::graph::{
    component_with_cap, full_graph_with_cap, GraphError, IsotopyGraph, DEFAULT_COMPONENT_CAP,
};
use isotopy_core::invariants::{
    analyze, find_triangles, fourth_clique_vertex, triangle_witnesses, AnalysisReport,
};
use isotopy_core::partition::Partition;
use isotopy_core::tableau::LatinTableau;

use crate::format::{
    parse_tableau, render_components_json, render_dot, render_dot_components, render_graph_json,
    render_labels, render_report_json, render_tableau, Report, ReportJson,
};
use crate::run;

/// Largest shape accepted on the command line, in boxes.
pub const MAX_BOXES: usize = 64;

#[derive(Debug, Parser)]
#[command(
    name = "isotopy",
    version,
    about = "Latin tableaux and their isotopy graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the Latin tableaux of a shape, blank-line separated.
    Enumerate {
        #[arg(value_parser = parse_shape)]
        shape: Partition,
        /// Print only the number of fillings.
        #[arg(long)]
        count_only: bool,
        /// Stop after this many fillings.
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Report the invariants of one component, or of every component of a shape.
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Also write the reports as JSON.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Largest component size to build.
        #[arg(long, default_value_t = DEFAULT_COMPONENT_CAP)]
        cap: usize,
    },
    /// Emit isotopy graphs as DOT or JSON. Without --dot or --json, DOT goes to stdout.
    Graph {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Largest component size to build.
        #[arg(long, default_value_t = DEFAULT_COMPONENT_CAP)]
        cap: usize,
    },
    /// Print a tableau from one of the constructed families.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Print the catalog of tableaux whose isotopy graphs contain triangles.
    Catalog {
        #[command(subcommand)]
        catalog: CatalogName,
    },
    /// Compare wideness with fillability for every shape up to a size.
    VerifyWpc {
        #[arg(long)]
        max_n: usize,
        /// Count all fillings instead of stopping at the first.
        #[arg(long)]
        count: bool,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Check the degree, clique, triangle, cube and orbit-stabilizer
    /// theorems on every filling of every shape up to a size.
    VerifyTheorems {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, default_value_t = DEFAULT_COMPONENT_CAP)]
        cap: usize,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// A shape such as 4,3,3; every component is processed.
    #[arg(value_parser = parse_shape)]
    shape: Option<Partition>,
    /// A tableau file; its component is processed.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// The tableau whose isotopy graph is the d-cube.
    Td {
        #[arg(value_parser = clap::value_parser!(u16).range(0..=255))]
        d: u16,
    },
    /// The symmetric tableau of shape (2k, 2k, ..., 2, 2).
    Symfam { k: usize },
}

#[derive(Debug, Subcommand)]
pub enum CatalogName {
    Appendix {
        /// Verify each entry's claimed invariants.
        #[arg(long)]
        check: bool,
    },
}

fn parse_shape(text: &str) -> Result<Partition, String> {
    let shape: Partition = text.parse().map_err(|e| format!("{e}"))?;
    if shape.total() > MAX_BOXES {
        return Err(format!(
            "shapes are limited to {MAX_BOXES} boxes, this one has {}",
            shape.total()
        ));
    }
    Ok(shape)
}

/// An error with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn verification(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        let code = match e {
            GraphError::ComponentTooLarge { .. } => 3,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = run_from(std::env::args_os(), &mut out, &mut io::stderr());
    if out.flush().is_err() {
        return 2;
    }
    code
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Enumerate {
            shape,
            count_only,
            limit,
            jobs,
        } => enumerate(&shape, count_only, limit, jobs, out),
        Command::Analyze { input, json, cap } => analyze_cmd(&input, cap, json.as_deref(), out),
        Command::Graph {
            input,
            dot,
            json,
            cap,
        } => graph_cmd(&input, cap, dot.as_deref(), json.as_deref(), out),
        Command::Construct { family } => {
            let tableau = match family {
                Family::Td { d } => build_td(d as usize),
                Family::Symfam { k } if k >= 1 => build_symmetric_family(k),
                Family::Symfam { .. } => return Err(Failure::usage("symfam needs k >= 1")),
            };
            out.write_all(render_tableau(&tableau).as_bytes())?;
            Ok(())
        }
        Command::Catalog {
            catalog: CatalogName::Appendix { check },
        } => catalog_cmd(check, out),
        Command::VerifyWpc { max_n, count, jobs } => verify_wpc_cmd(max_n, count, jobs, out),
        Command::VerifyTheorems { max_n, jobs, cap } => {
            let summary = run::with_jobs(jobs, || run::verify_theorems(max_n, cap));
            write!(out, "{summary}")?;
            if summary.passed() {
                Ok(())
            } else {
                Err(Failure::verification(format!(
                    "{} checks failed",
                    summary.failures.len()
                )))
            }
        }
    }
}

fn enumerate(
    shape: &Partition,
    count_only: bool,
    limit: Option<u64>,
    jobs: usize,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    if count_only {
        let n = match limit {
            Some(k) => enumerate_fillings(shape).take(k as usize).count() as u64,
            None => run::with_jobs(jobs, || run::count_fillings(shape)),
        };
        writeln!(out, "{n}")?;
        return Ok(());
    }
    let fillings = enumerate_fillings(shape).take(limit.map_or(usize::MAX, |k| k as usize));
    for (i, t) in fillings.enumerate() {
        if i > 0 {
            out.write_all(b"\n")?;
        }
        out.write_all(render_tableau(&t).as_bytes())?;
    }
    Ok(())
}

fn read_tableau(path: &Path) -> Result<LatinTableau, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    parse_tableau(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

/// The requested components, each with its analysis.
fn load(input: &Input, cap: usize) -> Result<Vec<(IsotopyGraph, AnalysisReport)>, Failure> {
    let graphs = match (&input.shape, &input.file) {
        (Some(shape), _) => full_graph_with_cap(shape, cap)?,
        (None, Some(path)) => vec![component_with_cap(&read_tableau(path)?, cap)?],
        (None, None) => unreachable!("clap requires one input"),
    };
    graphs
        .into_iter()
        .map(|g| {
            let a = analyze(&g)?;
            Ok((g, a))
        })
        .collect()
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn render_report_text(index: usize, report: &Report) -> String {
    let a = &report.analysis;
    let mut s = String::new();
    writeln!(s, "component {index}").unwrap();
    writeln!(s, "shape: {}", a.shape).unwrap();
    s.push_str("basepoint:\n");
    for line in render_tableau(&report.basepoint).lines() {
        writeln!(s, "  {line}").unwrap();
    }
    writeln!(s, "component_size: {}", a.component_size).unwrap();
    writeln!(s, "degree: {}", a.degree).unwrap();
    writeln!(s, "degree_formula: {}", a.degree_formula).unwrap();
    let pairs: Vec<String> = a
        .symmetric_pairs
        .iter()
        .map(|p| render_labels([p.columns, p.entries]))
        .collect();
    writeln!(
        s,
        "symmetric_pairs: {}",
        if pairs.is_empty() {
            "none".into()
        } else {
            pairs.join(" ")
        }
    )
    .unwrap();
    writeln!(s, "stabilizer_order: {}", a.stabilizer_order).unwrap();
    writeln!(s, "has_triangle: {}", a.has_triangle).unwrap();
    writeln!(s, "clique_number: {}", a.clique_number).unwrap();
    match a.cube_dimension {
        Some(d) => writeln!(s, "cube_dimension: {d}").unwrap(),
        None => writeln!(s, "cube_dimension: none").unwrap(),
    }
    writeln!(s, "cube_criterion: {}", a.cube_criterion).unwrap();
    s
}

fn analyze_cmd(
    input: &Input,
    cap: usize,
    json: Option<&Path>,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let parts = load(input, cap)?;
    let reports: Vec<Report> = parts
        .iter()
        .map(|(g, a)| Report::new(g.basepoint(), a.clone()))
        .collect();
    for (i, r) in reports.iter().enumerate() {
        if i > 0 {
            out.write_all(b"\n")?;
        }
        out.write_all(render_report_text(i + 1, r).as_bytes())?;
    }
    if let Some(path) = json {
        let text = if input.shape.is_some() {
            let docs: Vec<ReportJson> = reports.iter().map(ReportJson::from).collect();
            serde_json::to_string_pretty(&docs).expect("serializable") + "\n"
        } else {
            render_report_json(&reports[0])
        };
        write_file(path, &text)?;
    }
    Ok(())
}

fn graph_cmd(
    input: &Input,
    cap: usize,
    dot: Option<&Path>,
    json: Option<&Path>,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let parts = load(input, cap)?;
    let render_dot_text = || match &input.shape {
        Some(shape) => {
            let graphs: Vec<IsotopyGraph> = parts.iter().map(|(g, _)| g.clone()).collect();
            render_dot_components(shape, &graphs)
        }
        None => render_dot(&parts[0].0),
    };
    if let Some(path) = json {
        let text = if input.shape.is_some() {
            render_components_json(&parts)
        } else {
            render_graph_json(&parts[0].0, &parts[0].1)
        };
        write_file(path, &text)?;
    }
    match dot {
        Some(path) => write_file(path, &render_dot_text())?,
        None if json.is_none() => out.write_all(render_dot_text().as_bytes())?,
        None => {}
    }
    Ok(())
}

fn catalog_cmd(check: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let mut failures = 0;
    for (i, entry) in appendix_catalog().iter().enumerate() {
        if i > 0 {
            out.write_all(b"\n")?;
        }
        let (r, c) = entry.highlight;
        writeln!(out, "{}", entry.name)?;
        writeln!(out, "listed: {}", entry.raw)?;
        writeln!(out, "marked: {r} {c}")?;
        out.write_all(render_tableau(&entry.tableau).as_bytes())?;
        if !check {
            continue;
        }
        let graph = component_with_cap(&entry.tableau, DEFAULT_COMPONENT_CAP)?;
        let report = analyze(&graph)?;
        let mut problems: Vec<String> = entry
            .expected
            .mismatches(&report)
            .into_iter()
            .map(|f| format!("{f} differs"))
            .collect();
        let marked = triangle_witnesses(&entry.tableau)
            .into_iter()
            .find(|w| w.row == r && w.col == c);
        match marked {
            Some(w) if w.conditions_hold() => {}
            Some(_) => problems.push("marked witness fails the structural conditions".into()),
            None => problems.push("marked rows and columns give no entry swap".into()),
        }
        if find_triangles(&graph)
            .into_iter()
            .any(|t| fourth_clique_vertex(&graph, t).is_none())
        {
            problems.push("a triangle lies in no 4-clique".into());
        }
        if problems.is_empty() {
            writeln!(out, "check: PASS")?;
        } else {
            failures += 1;
            writeln!(out, "check: FAIL ({})", problems.join("; "))?;
        }
    }
    if failures > 0 {
        return Err(Failure::verification(format!(
            "{failures} catalog entries failed"
        )));
    }
    Ok(())
}

fn verify_wpc_cmd(
    max_n: usize,
    count: bool,
    jobs: usize,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let records = run::with_jobs(jobs, || run::verify_wpc_range(max_n, count));
    writeln!(out, "shape wide fillable count consistent")?;
    for r in &records {
        let n = r.filling_count.map_or("-".to_string(), |n| n.to_string());
        writeln!(
            out,
            "{} {} {} {} {}",
            r.shape, r.wide, r.fillable, n, r.consistent
        )?;
    }
    let bad: Vec<&Partition> = records
        .iter()
        .filter(|r| !r.consistent)
        .map(|r| &r.shape)
        .collect();
    writeln!(
        out,
        "{} shapes with at most {max_n} boxes: {} consistent, {} inconsistent",
        records.len(),
        records.len() - bad.len(),
        bad.len()
    )?;
    if bad.is_empty() {
        Ok(())
    } else {
        for shape in &bad {
            writeln!(out, "COUNTEREXAMPLE {shape}")?;
        }
        Err(Failure::verification(format!(
            "{} shapes contradict wide <=> fillable",
            bad.len()
        )))
    }
}
