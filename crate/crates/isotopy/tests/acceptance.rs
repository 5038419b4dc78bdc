//! Acceptance suite. Every criterion runs in full, prints one PASS/FAIL line,
//! and the process exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use isotopy::format::render_dot_components;
use isotopy::run::{count_fillings, verify_wpc_range};
use isotopy_core::constructions::{appendix_catalog, build_symmetric_family, build_td};
use isotopy_core::enumerate_fillings;
use isotopy_core::graph::{component, full_graph, orbit_summaries, GraphError};
use isotopy_core::invariants::{
    analyze, clique_number, cube_criterion, find_triangles, fourth_clique_vertex, has_triangle,
    is_cube, max_clique_size, vertex_degree,
};
use isotopy_core::partition::{partitions_up_to, Partition};
use isotopy_core::tableau::LatinTableau;
use isotopy_core::verify::{check_shape, Checks, Finding};

/// Cap for the orbit-only traversal in criterion 12; the largest orbit at
/// ten boxes is the 10! fillings of a single row.
const ORBIT_CAP: usize = 1 << 22;
const GRAPH_CAP: usize = 1 << 20;

type Outcome = Result<String, String>;

fn shape(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn compact(t: &LatinTableau) -> String {
    t.rows()
        .map(|r| r.iter().map(|v| v.to_string()).collect::<String>())
        .collect::<Vec<_>>()
        .join("/")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Runs `check` over every shape with at most `max_boxes` boxes (optionally
/// filtered) and collects findings of the named check.
fn sweep(
    max_boxes: usize,
    filter: impl Fn(&Partition) -> bool,
    checks: Checks,
    name: &str,
) -> Result<(usize, Vec<Finding>), String> {
    let mut fillings = 0;
    let mut findings = Vec::new();
    for s in partitions_up_to(max_boxes)
        .into_iter()
        .filter(|s| filter(s))
    {
        let check = check_shape(&s, GRAPH_CAP, checks).map_err(|e| format!("shape {s}: {e}"))?;
        fillings += check.fillings();
        findings.extend(
            check
                .findings()
                .filter(|f| f.violation.check() == name)
                .cloned(),
        );
    }
    Ok((fillings, findings))
}

fn report_findings(fillings: usize, findings: &[Finding]) -> Outcome {
    match findings.first() {
        None => Ok(format!("{fillings} fillings")),
        Some(f) => {
            let mut shapes: Vec<String> = findings
                .iter()
                .map(|f| format!("({})", f.tableau.shape()))
                .collect();
            shapes.dedup();
            Err(format!(
                "{} of {fillings} fillings disagree, shapes {}; first {}: {}",
                findings.len(),
                shapes.join(" "),
                compact(&f.tableau),
                f.violation
            ))
        }
    }
}

fn degree_example() -> Outcome {
    let g = component(&LatinTableau::from_compact(&["1234", "2143"]).unwrap())
        .map_err(|e| e.to_string())?;
    let d = vertex_degree(&g).map_err(|e| e.to_string())?;
    ensure(d == 11, || format!("degree {d}"))?;
    Ok(format!("degree {d}, {} vertices", g.num_vertices()))
}

fn latin_squares_of_order_three() -> Outcome {
    let squares: Vec<_> = enumerate_fillings(&shape(&[3, 3, 3])).collect();
    ensure(squares.len() == 12, || format!("{} squares", squares.len()))?;
    let graphs = full_graph(&shape(&[3, 3, 3])).map_err(|e| e.to_string())?;
    ensure(graphs.len() == 1, || format!("{} components", graphs.len()))?;
    let g = &graphs[0];
    ensure(g.num_vertices() == 12, || {
        format!("{} vertices", g.num_vertices())
    })?;
    for t in &squares {
        let v = g
            .index_of(t)
            .ok_or_else(|| format!("{} missing", compact(t)))?;
        ensure(g.degree(v) == 9, || {
            format!("{} has degree {}", compact(t), g.degree(v))
        })?;
    }
    Ok("12 squares, one component, all degrees 9".into())
}

fn two_components_of_three_two() -> Outcome {
    let s = shape(&[3, 2]);
    let graphs = full_graph(&s).map_err(|e| e.to_string())?;
    let mut found: Vec<(usize, Option<usize>)> = graphs
        .iter()
        .map(|g| (g.num_vertices(), is_cube(g)))
        .collect();
    found.sort();
    ensure(found == [(2, Some(1)), (4, Some(2))], || {
        format!("components {found:?}")
    })?;
    let dot = render_dot_components(&s, &graphs);
    let nodes = dot
        .lines()
        .filter(|l| l.contains("[label=") && !l.contains("--"))
        .count();
    ensure(nodes == 6, || format!("DOT has {nodes} nodes"))?;
    Ok("sizes 2 and 4, cube dimensions 1 and 2, 6 DOT nodes".into())
}

fn clique_theorem() -> Outcome {
    let mut fillings = 0;
    for s in partitions_up_to(8) {
        for g in full_graph(&s).map_err(|e| format!("{s}: {e}"))? {
            let fast = clique_number(&g)
                .map_err(|e| format!("{s} at {}: {e}", compact(&g.basepoint())))?;
            let brute = max_clique_size(&g);
            ensure([1, 2, 4].contains(&fast) && fast == brute, || {
                format!(
                    "{s} at {}: clique number {fast}, brute force {brute}",
                    compact(&g.basepoint())
                )
            })?;
            fillings += g.num_vertices();
        }
    }
    let g = component(&LatinTableau::from_compact(&["1234", "2143"]).unwrap())
        .map_err(|e| e.to_string())?;
    let k = clique_number(&g).map_err(|e| e.to_string())?;
    ensure(k == 4, || format!("(4,4) clique number {k}"))?;
    Ok(format!("{fillings} fillings, (4,4) clique number 4"))
}

fn degree_formula() -> Outcome {
    let checks = Checks {
        degree: true,
        ..Checks::NONE
    };
    let (fillings, findings) = sweep(8, |_| true, checks, "degree-formula")?;
    report_findings(fillings, &findings)
}

fn triangle_proposition() -> Outcome {
    let checks = Checks {
        triangles: true,
        ..Checks::NONE
    };
    let (fillings, findings) = sweep(8, |_| true, checks, "triangle-characterization")?;
    let detail = report_findings(fillings, &findings)?;
    let graphs = full_graph(&shape(&[4, 4, 3, 1])).map_err(|e| e.to_string())?;
    let bad = graphs.iter().filter(|g| has_triangle(g)).count();
    ensure(bad == 0, || {
        format!("{bad} (4,4,3,1) components contain a triangle")
    })?;
    let n: usize = graphs.iter().map(|g| g.num_vertices()).sum();
    Ok(format!("{detail}; {n} (4,4,3,1) fillings triangle-free"))
}

fn cube_family() -> Outcome {
    for d in 0..=10 {
        let t = build_td(d);
        let g = component(&t).map_err(|e| format!("d={d}: {e}"))?;
        ensure(g.num_vertices() == 1 << d, || {
            format!("d={d}: size {}", g.num_vertices())
        })?;
        ensure(is_cube(&g) == Some(d), || {
            format!("d={d}: is_cube {:?}", is_cube(&g))
        })?;
        let criterion = cube_criterion(&g).map_err(|e| format!("d={d}: {e}"))?;
        ensure(criterion, || format!("d={d}: cube criterion false"))?;
    }
    let t8 = compact(&build_td(8));
    ensure(t8 == "75312468/531246/3124/12", || format!("T_8 = {t8}"))?;
    let t9 = compact(&build_td(9));
    ensure(t9 == "87531246/75312468/531246/3124/12", || {
        format!("T_9 = {t9}")
    })?;
    Ok("d = 0..=10 are cubes of size 2^d, T_8 and T_9 exact".into())
}

fn non_cube_family() -> Outcome {
    let g = component(&build_symmetric_family(3)).map_err(|e| e.to_string())?;
    let d = vertex_degree(&g).map_err(|e| e.to_string())?;
    ensure(d == 9, || format!("degree {d}"))?;
    ensure(g.num_vertices() < 1 << 9, || {
        format!("size {}", g.num_vertices())
    })?;
    ensure(is_cube(&g).is_none(), || "recognized as a cube".into())?;
    Ok(format!("degree 9, size {}, not a cube", g.num_vertices()))
}

fn cube_criterion_equivalence() -> Outcome {
    let checks = Checks {
        cube: true,
        ..Checks::NONE
    };
    let (fillings, findings) = sweep(10, Partition::is_squareable, checks, "cube-criterion")?;
    report_findings(fillings, &findings)
}

fn wide_partition_conjecture() -> Outcome {
    let records = verify_wpc_range(12, false);
    let bad: Vec<String> = records
        .iter()
        .filter(|r| !r.consistent)
        .map(|r| r.shape.to_string())
        .collect();
    ensure(bad.is_empty(), || {
        format!("counterexamples {}", bad.join(" "))
    })?;
    Ok(format!("{} shapes consistent", records.len()))
}

fn catalog() -> Outcome {
    let entries = appendix_catalog();
    for e in &entries {
        let g = component(&e.tableau).map_err(|err| format!("{}: {err}", e.name))?;
        let triangles = find_triangles(&g);
        ensure(!triangles.is_empty(), || format!("{}: no triangle", e.name))?;
        ensure(
            triangles
                .iter()
                .all(|&t| fourth_clique_vertex(&g, t).is_some()),
            || format!("{}: a triangle is not in a 4-clique", e.name),
        )?;
        let report = analyze(&g).map_err(|err| format!("{}: {err}", e.name))?;
        let wrong = e.expected.mismatches(&report);
        ensure(wrong.is_empty(), || format!("{}: {wrong:?} differ", e.name))?;
    }
    Ok(format!("{} entries", entries.len()))
}

fn orbit_stabilizer() -> Outcome {
    let mut fillings = 0u64;
    for s in partitions_up_to(10) {
        let group = s
            .isotopy_group_order()
            .ok_or_else(|| format!("{s}: group order overflows"))?;
        let orbits = orbit_summaries(&s, ORBIT_CAP).map_err(|e: GraphError| format!("{s}: {e}"))?;
        for o in &orbits {
            ensure(group % o.size as u128 == 0, || {
                format!(
                    "{s} at {}: {} does not divide {group}",
                    compact(&o.basepoint),
                    o.size
                )
            })?;
            ensure(o.is_regular(), || {
                format!(
                    "{s} at {}: degrees {}..={}",
                    compact(&o.basepoint),
                    o.min_degree,
                    o.max_degree
                )
            })?;
        }
        let covered: u64 = orbits.iter().map(|o| o.size as u64).sum();
        let total = count_fillings(&s);
        ensure(covered == total, || {
            format!("{s}: orbits cover {covered} of {total} fillings")
        })?;
        fillings += total;
    }
    Ok(format!("{fillings} fillings"))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion {
            id: 1,
            name: "degree of (1234,2143) is 11",
            limit: secs(1),
            run: degree_example,
        },
        Criterion {
            id: 2,
            name: "order-3 Latin squares form a 9-regular component",
            limit: secs(1),
            run: latin_squares_of_order_three,
        },
        Criterion {
            id: 3,
            name: "(3,2) has a 1-cube and a 2-cube",
            limit: secs(1),
            run: two_components_of_three_two,
        },
        Criterion {
            id: 4,
            name: "clique number in {1,2,4}, brute force agrees, <= 8 boxes",
            limit: secs(120),
            run: clique_theorem,
        },
        Criterion {
            id: 5,
            name: "degree equals a+2b-p, <= 8 boxes",
            limit: secs(120),
            run: degree_formula,
        },
        Criterion {
            id: 6,
            name: "triangle characterization, <= 8 boxes; (4,4,3,1) triangle-free",
            limit: secs(120),
            run: triangle_proposition,
        },
        Criterion {
            id: 7,
            name: "T_d is a d-cube for d <= 10",
            limit: secs(60),
            run: cube_family,
        },
        Criterion {
            id: 8,
            name: "symmetric family k=3 is 9-regular and not a cube",
            limit: secs(10),
            run: non_cube_family,
        },
        Criterion {
            id: 9,
            name: "cube criterion iff cube, squareable shapes <= 10 boxes",
            limit: secs(300),
            run: cube_criterion_equivalence,
        },
        Criterion {
            id: 10,
            name: "wide iff fillable, <= 12 boxes",
            limit: secs(300),
            run: wide_partition_conjecture,
        },
        Criterion {
            id: 11,
            name: "catalog entries have triangles in 4-cliques",
            limit: secs(30),
            run: catalog,
        },
        Criterion {
            id: 12,
            name: "orbit-stabilizer and regularity, <= 10 boxes",
            limit: secs(300),
            run: orbit_stabilizer,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let mut outcome = (c.run)();
        let elapsed = start.elapsed();
        if outcome.is_ok() && elapsed > c.limit {
            outcome = Err(format!("took longer than {:?}", c.limit));
        }
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!(
            "{status} {:>2}: {} ({detail}; {:.2?} of {:?})",
            c.id, c.name, elapsed, c.limit
        );
        failed += usize::from(outcome.is_err());
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
