//! Text, DOT and JSON encodings.
//!
//! Tableau text has one row per line with entries separated by single
//! spaces. All output uses LF line endings and is byte-identical across runs.

use std::fmt::Write as _;

use isotopy_core::graph::IsotopyGraph;
use isotopy_core::invariants::{AnalysisReport, SymmetricPair};
use isotopy_core::partition::Partition;
use isotopy_core::tableau::{ElementaryTransform, Entry, LatinTableau, TableauError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {reason}")]
    Syntax {
        line: usize,
        column: usize,
        reason: String,
    },
    #[error(transparent)]
    Invalid(#[from] TableauError),
}

fn syntax(line: usize, column: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        column,
        reason: reason.into(),
    }
}

/// Parses tableau text. The shape is read off the row lengths, which must not
/// increase. Trailing blank lines are ignored.
pub fn parse_tableau(text: &str) -> Result<LatinTableau, ParseError> {
    let lines: Vec<&str> = text.lines().collect();
    let used = lines
        .iter()
        .rposition(|l| !l.trim().is_empty())
        .map_or(0, |i| i + 1);
    if used == 0 {
        return Err(syntax(1, 1, "empty tableau"));
    }
    let mut rows: Vec<Vec<Entry>> = Vec::with_capacity(used);
    for (i, line) in lines[..used].iter().enumerate() {
        let mut row = Vec::new();
        let mut column = 0;
        for token in line.split([' ', '\t']) {
            column += 1;
            if token.is_empty() {
                continue;
            }
            let start = column;
            column += token.chars().count();
            let value: Entry = token.parse().ok().filter(|&v| v > 0).ok_or_else(|| {
                syntax(
                    i + 1,
                    start,
                    format!("expected a positive integer, found `{token}`"),
                )
            })?;
            row.push(value);
        }
        if row.is_empty() {
            return Err(syntax(i + 1, 1, "empty row"));
        }
        if let Some(prev) = rows.last() {
            if row.len() > prev.len() {
                return Err(syntax(
                    i + 1,
                    1,
                    format!(
                        "row has {} entries, more than the {} above it",
                        row.len(),
                        prev.len()
                    ),
                ));
            }
        }
        rows.push(row);
    }
    Ok(LatinTableau::from_rows(&rows)?)
}

/// Parses a blank-line separated sequence of tableaux.
pub fn parse_tableaux(text: &str) -> Result<Vec<LatinTableau>, ParseError> {
    let mut out = Vec::new();
    let mut block = String::new();
    let mut first_line = 1;
    for (i, line) in text.lines().chain([""]).enumerate() {
        if line.trim().is_empty() {
            if !block.is_empty() {
                out.push(parse_tableau(&block).map_err(|e| match e {
                    ParseError::Syntax {
                        line,
                        column,
                        reason,
                    } => ParseError::Syntax {
                        line: line + first_line - 1,
                        column,
                        reason,
                    },
                    other => other,
                })?);
                block.clear();
            }
            first_line = i + 2;
        } else {
            block.push_str(line);
            block.push('\n');
        }
    }
    Ok(out)
}

fn write_row(out: &mut String, row: &[Entry]) {
    for (j, v) in row.iter().enumerate() {
        if j > 0 {
            out.push(' ');
        }
        write!(out, "{v}").unwrap();
    }
}

/// One line per row, each terminated by a newline.
pub fn render_tableau(tableau: &LatinTableau) -> String {
    let mut out = String::new();
    for row in tableau.rows() {
        write_row(&mut out, row);
        out.push('\n');
    }
    out
}

/// Labels of an edge joined by `=`, e.g. `c(1,2)=s(1,2)`.
pub fn render_labels(labels: impl IntoIterator<Item = ElementaryTransform>) -> String {
    labels
        .into_iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join("=")
}

fn dot_label(tableau_rows: impl Iterator<Item = impl AsRef<[Entry]>>) -> String {
    let mut label = String::new();
    for (i, row) in tableau_rows.enumerate() {
        if i > 0 {
            label.push_str("\\n");
        }
        write_row(&mut label, row.as_ref());
    }
    label
}

fn write_component(out: &mut String, graph: &IsotopyGraph, prefix: &str, indent: &str) {
    let width = graph.shape().parts().to_vec();
    for x in 0..graph.num_vertices() {
        let cells = graph.vertex_cells(x);
        let mut start = 0;
        let rows = width.iter().map(|&len| {
            let row = &cells[start..start + len];
            start += len;
            row
        });
        writeln!(
            out,
            "{indent}{prefix}{} [label=\"{}\"];",
            x + 1,
            dot_label(rows)
        )
        .unwrap();
    }
    for e in graph.edges() {
        writeln!(
            out,
            "{indent}{prefix}{} -- {prefix}{} [label=\"{}\"];",
            e.u + 1,
            e.v + 1,
            render_labels(e.labels())
        )
        .unwrap();
    }
}

const DOT_HEADER: &str = "  node [shape=box, fontname=\"monospace\"];\n";

/// Undirected DOT for one component. Nodes are `v1, v2, ...` in discovery
/// order.
pub fn render_dot(graph: &IsotopyGraph) -> String {
    let mut out = format!("graph \"{}\" {{\n{DOT_HEADER}", graph.shape());
    write_component(&mut out, graph, "v", "  ");
    out.push_str("}\n");
    out
}

/// Undirected DOT for all components of a shape, one cluster each. Nodes of
/// component `k` are `c{k}v1, c{k}v2, ...`.
pub fn render_dot_components(shape: &Partition, graphs: &[IsotopyGraph]) -> String {
    let mut out = format!("graph \"{shape}\" {{\n{DOT_HEADER}");
    for (k, graph) in graphs.iter().enumerate() {
        writeln!(out, "  subgraph cluster_{} {{", k + 1).unwrap();
        write_component(&mut out, graph, &format!("c{}v", k + 1), "    ");
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}

/// An analysis together with where it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub tool_version: String,
    pub basepoint: LatinTableau,
    pub analysis: AnalysisReport,
}

impl Report {
    pub fn new(basepoint: LatinTableau, analysis: AnalysisReport) -> Self {
        Report {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            basepoint,
            analysis,
        }
    }
}

/// Serialized form of a symmetric pair, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricPairJson {
    pub columns: [usize; 2],
    pub entries: [usize; 2],
}

/// Serialized form of [`Report`]. Field order is the key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub tool_version: String,
    pub shape_text: String,
    pub basepoint: Vec<Vec<Entry>>,
    pub shape: Vec<usize>,
    pub component_size: usize,
    pub degree: usize,
    pub degree_formula: usize,
    pub symmetric_pairs: Vec<SymmetricPairJson>,
    pub stabilizer_order: u128,
    pub has_triangle: bool,
    pub clique_number: usize,
    pub cube_dimension: Option<usize>,
    pub cube_criterion: bool,
}

fn rows_of(tableau: &LatinTableau) -> Vec<Vec<Entry>> {
    tableau.rows().map(<[Entry]>::to_vec).collect()
}

impl From<&Report> for ReportJson {
    fn from(r: &Report) -> Self {
        let a = &r.analysis;
        ReportJson {
            tool_version: r.tool_version.clone(),
            shape_text: a.shape.to_string(),
            basepoint: rows_of(&r.basepoint),
            shape: a.shape.parts().to_vec(),
            component_size: a.component_size,
            degree: a.degree,
            degree_formula: a.degree_formula,
            symmetric_pairs: a
                .symmetric_pairs
                .iter()
                .map(|p| {
                    let (i, j) = p.columns.pair();
                    let (x, y) = p.entries.pair();
                    SymmetricPairJson {
                        columns: [i + 1, j + 1],
                        entries: [x + 1, y + 1],
                    }
                })
                .collect(),
            stabilizer_order: a.stabilizer_order,
            has_triangle: a.has_triangle,
            clique_number: a.clique_number,
            cube_dimension: a.cube_dimension,
            cube_criterion: a.cube_criterion,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(String),
    #[error("invalid shape: {0}")]
    Shape(#[from] isotopy_core::partition::PartitionError),
    #[error("invalid basepoint: {0}")]
    Basepoint(#[from] TableauError),
    #[error("shape_text `{0}` disagrees with shape")]
    ShapeText(String),
    #[error("symmetric pair indices out of range")]
    PairIndex,
}

impl TryFrom<ReportJson> for Report {
    type Error = JsonError;

    fn try_from(j: ReportJson) -> Result<Self, JsonError> {
        let shape = Partition::new(j.shape)?;
        if j.shape_text != shape.to_string() {
            return Err(JsonError::ShapeText(j.shape_text));
        }
        let basepoint = LatinTableau::new(shape.clone(), &j.basepoint)?;
        let pair = |[a, b]: [usize; 2]| (a >= 1 && b > a).then(|| (a - 1, b - 1));
        let symmetric_pairs = j
            .symmetric_pairs
            .into_iter()
            .map(|p| {
                let (i, k) = pair(p.columns).ok_or(JsonError::PairIndex)?;
                let (x, y) = pair(p.entries).ok_or(JsonError::PairIndex)?;
                Ok(SymmetricPair {
                    columns: ElementaryTransform::col(i, k),
                    entries: ElementaryTransform::ent(x, y),
                })
            })
            .collect::<Result<_, JsonError>>()?;
        Ok(Report {
            tool_version: j.tool_version,
            basepoint,
            analysis: AnalysisReport {
                shape,
                component_size: j.component_size,
                degree: j.degree,
                degree_formula: j.degree_formula,
                symmetric_pairs,
                stabilizer_order: j.stabilizer_order,
                has_triangle: j.has_triangle,
                clique_number: j.clique_number,
                cube_dimension: j.cube_dimension,
                cube_criterion: j.cube_criterion,
            },
        })
    }
}

pub fn render_report_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(&ReportJson::from(report)).expect("serializable");
    s.push('\n');
    s
}

pub fn parse_report_json(text: &str) -> Result<Report, JsonError> {
    let j: ReportJson = serde_json::from_str(text).map_err(|e| JsonError::Syntax(e.to_string()))?;
    Report::try_from(j)
}

/// Serialized edge, with 1-based endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub u: usize,
    pub v: usize,
    pub labels: Vec<String>,
}

/// Serialized component: shape, vertices in discovery order, edges, report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub shape: Vec<usize>,
    pub vertices: Vec<Vec<Vec<Entry>>>,
    pub edges: Vec<EdgeJson>,
    pub report: ReportJson,
}

impl GraphJson {
    pub fn new(graph: &IsotopyGraph, analysis: &AnalysisReport) -> Self {
        GraphJson {
            shape: graph.shape().parts().to_vec(),
            vertices: (0..graph.num_vertices())
                .map(|x| rows_of(&graph.vertex(x)))
                .collect(),
            edges: graph
                .edges()
                .map(|e| EdgeJson {
                    u: e.u + 1,
                    v: e.v + 1,
                    labels: e.labels().map(|l| l.to_string()).collect(),
                })
                .collect(),
            report: ReportJson::from(&Report::new(graph.basepoint(), analysis.clone())),
        }
    }
}

/// One JSON object for a single component.
pub fn render_graph_json(graph: &IsotopyGraph, analysis: &AnalysisReport) -> String {
    let mut s =
        serde_json::to_string_pretty(&GraphJson::new(graph, analysis)).expect("serializable");
    s.push('\n');
    s
}

/// A JSON array with one object per component.
pub fn render_components_json(parts: &[(IsotopyGraph, AnalysisReport)]) -> String {
    let docs: Vec<GraphJson> = parts.iter().map(|(g, a)| GraphJson::new(g, a)).collect();
    let mut s = serde_json::to_string_pretty(&docs).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use isotopy_core::graph::{component, full_graph};
    use isotopy_core::invariants::analyze;

    fn t(rows: &[&str]) -> LatinTableau {
        LatinTableau::from_compact(rows).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_tableau("3 1 2\n1 2").unwrap(), t(&["312", "12"]));
        assert_eq!(parse_tableau("3 1 2\n1 2\n\n").unwrap(), t(&["312", "12"]));
        assert!(matches!(
            parse_tableau("1 2\n1 2"),
            Err(ParseError::Invalid(TableauError::ColumnRepeat { .. }))
        ));
        assert!(matches!(
            parse_tableau("1 2\n1 2 3"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert_eq!(
            parse_tableau("1 2\n2 x"),
            Err(syntax(2, 3, "expected a positive integer, found `x`"))
        );
        assert!(matches!(
            parse_tableau("1 0"),
            Err(ParseError::Syntax {
                line: 1,
                column: 3,
                ..
            })
        ));
        assert!(matches!(parse_tableau(""), Err(ParseError::Syntax { .. })));
        assert!(matches!(
            parse_tableau("1 2\n\n2 1"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
    }

    #[test]
    fn render_round_trip() {
        let tab = t(&["2431", "4312", "312", "12"]);
        assert_eq!(render_tableau(&tab), "2 4 3 1\n4 3 1 2\n3 1 2\n1 2\n");
        assert_eq!(parse_tableau(&render_tableau(&tab)).unwrap(), tab);
        let wide = LatinTableau::from_rows(&[(1..=12).rev().collect::<Vec<Entry>>()]).unwrap();
        assert_eq!(parse_tableau(&render_tableau(&wide)).unwrap(), wide);
    }

    #[test]
    fn several_tableaux() {
        let text = "1 2\n2 1\n\n2 1\n1 2\n";
        assert_eq!(
            parse_tableaux(text).unwrap(),
            [t(&["12", "21"]), t(&["21", "12"])]
        );
        assert!(matches!(
            parse_tableaux("1 2\n2 1\n\n2 1\n1 1\n"),
            Err(ParseError::Invalid(_))
        ));
        assert_eq!(
            parse_tableaux("1 2\n\n2 y\n"),
            Err(syntax(3, 3, "expected a positive integer, found `y`"))
        );
    }

    #[test]
    fn dot_single_edge() {
        let g = component(&t(&["12"])).unwrap();
        assert_eq!(
            render_dot(&g),
            "graph \"2\" {\n  node [shape=box, fontname=\"monospace\"];\n  v1 [label=\"1 2\"];\n  v2 [label=\"2 1\"];\n  v1 -- v2 [label=\"c(1,2)=s(1,2)\"];\n}\n"
        );
    }

    #[test]
    fn dot_components() {
        let s = Partition::new(vec![3, 2]).unwrap();
        let graphs = full_graph(&s).unwrap();
        let dot = render_dot_components(&s, &graphs);
        assert_eq!(dot.matches("[label=\"").count(), 6 + 5);
        assert_eq!(dot.matches("subgraph cluster_").count(), 2);
        assert!(dot.contains("c2v2 [label=\"3 1 2\\n1 2\"];"), "{dot}");
        assert!(dot.contains("c2v1 -- c2v3 [label=\"s(1,2)\"];"), "{dot}");
    }

    #[test]
    fn report_json_round_trip() {
        let g = component(&t(&["1234", "2143"])).unwrap();
        let report = Report::new(g.basepoint(), analyze(&g).unwrap());
        let text = render_report_json(&report);
        assert_eq!(parse_report_json(&text).unwrap(), report);
        let keys: Vec<usize> = [
            "tool_version",
            "shape_text",
            "basepoint",
            "component_size",
            "cube_criterion",
        ]
        .iter()
        .map(|k| text.find(&format!("\"{k}\"")).unwrap())
        .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn large_stabilizer_round_trips() {
        let mut report = Report::new(
            t(&["12"]),
            analyze(&component(&t(&["12"])).unwrap()).unwrap(),
        );
        report.analysis.stabilizer_order = u128::MAX;
        assert_eq!(
            parse_report_json(&render_report_json(&report)).unwrap(),
            report
        );
    }

    #[test]
    fn graph_json_is_one_based() {
        let g = component(&t(&["12"])).unwrap();
        let text = render_graph_json(&g, &analyze(&g).unwrap());
        let doc: GraphJson = serde_json::from_str(&text).unwrap();
        assert_eq!(doc.shape, [2]);
        assert_eq!(doc.vertices, [vec![vec![1, 2]], vec![vec![2, 1]]]);
        assert_eq!(
            doc.edges,
            [EdgeJson {
                u: 1,
                v: 2,
                labels: vec!["c(1,2)".into(), "s(1,2)".into()]
            }]
        );
        assert!(text.find("\"shape\"").unwrap() < text.find("\"vertices\"").unwrap());
        assert!(text.find("\"edges\"").unwrap() < text.find("\"report\"").unwrap());
    }
}
