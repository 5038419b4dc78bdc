//! Exhaustive checks of the structural theorems on individual components.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{full_graph_with_cap, GraphError, IsotopyGraph};
use crate::invariants::{
    clique_number, degree_formula, find_triangles, fourth_clique_vertex, is_cube,
    structural_symmetric_pairs, stabilizer_criterion, stabilizer_order, symmetric_pairs,
    triangle_witnesses, vertex_degree,
};
use crate::partition::Partition;
use crate::tableau::{LatinTableau, TransformKind};

/// One failed check. Vertex indices refer to the component's discovery order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NonRegular {
        min: usize,
        max: usize,
    },
    DegreeBound {
        degree: usize,
        bound: usize,
    },
    DegreeFormula {
        vertex: usize,
        degree: usize,
        formula: usize,
    },
    SymmetricPairMismatch {
        vertex: usize,
    },
    Clique {
        fast: usize,
        brute_force: usize,
    },
    OrbitStabilizer {
        group_order: Option<u128>,
        component_size: usize,
    },
    TriangleCharacterization {
        vertex: usize,
        in_triangle: bool,
        has_witness: bool,
        conditions_hold: bool,
    },
    SameTypeEdges {
        triangle: [usize; 3],
    },
    TriangleWithoutFourClique {
        triangle: [usize; 3],
    },
    CubeCriterion {
        vertex: usize,
        criterion: bool,
        cube: Option<usize>,
    },
}

impl Violation {
    /// Short stable name of the failed check.
    pub fn check(&self) -> &'static str {
        use Violation::*;
        match self {
            NonRegular { .. } => "regularity",
            DegreeBound { .. } => "degree-bound",
            DegreeFormula { .. } => "degree-formula",
            SymmetricPairMismatch { .. } => "symmetric-pairs",
            Clique { .. } => "clique-number",
            OrbitStabilizer { .. } => "orbit-stabilizer",
            TriangleCharacterization { .. } => "triangle-characterization",
            SameTypeEdges { .. } => "same-type-edges",
            TriangleWithoutFourClique { .. } => "four-clique",
            CubeCriterion { .. } => "cube-criterion",
        }
    }

    /// The vertex the violation was observed at, when it is local to one.
    pub fn vertex(&self) -> Option<usize> {
        use Violation::*;
        match *self {
            DegreeFormula { vertex, .. }
            | SymmetricPairMismatch { vertex }
            | TriangleCharacterization { vertex, .. }
            | CubeCriterion { vertex, .. } => Some(vertex),
            SameTypeEdges { triangle } | TriangleWithoutFourClique { triangle } => {
                Some(triangle[0])
            }
            _ => None,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            NonRegular { min, max } => write!(f, "not regular: degrees {min}..={max}"),
            DegreeBound { degree, bound } => write!(f, "degree {degree} exceeds a+2b = {bound}"),
            DegreeFormula { vertex, degree, formula } => {
                write!(f, "vertex {}: degree {degree} but a+2b-p = {formula}", vertex + 1)
            }
            SymmetricPairMismatch { vertex } => write!(
                f,
                "vertex {}: operational and structural symmetric pairs differ",
                vertex + 1
            ),
            Clique { fast, brute_force } => {
                write!(f, "clique number {fast} but maximum clique has size {brute_force}")
            }
            OrbitStabilizer { group_order, component_size } => match group_order {
                Some(g) => write!(f, "group order {g} not divisible by component size {component_size}"),
                None => write!(f, "group order overflows"),
            },
            TriangleCharacterization { vertex, in_triangle, has_witness, conditions_hold } => write!(
                f,
                "vertex {}: in triangle {in_triangle}, witness {has_witness}, conditions {conditions_hold}",
                vertex + 1
            ),
            SameTypeEdges { triangle } => write!(
                f,
                "triangle {:?} has two edges of the same kind",
                triangle.map(|x| x + 1)
            ),
            TriangleWithoutFourClique { triangle } => write!(
                f,
                "triangle {:?} is not contained in a 4-clique",
                triangle.map(|x| x + 1)
            ),
            CubeCriterion { vertex, criterion, cube } => write!(
                f,
                "vertex {}: cube criterion {criterion} but cube dimension {cube:?}",
                vertex + 1
            ),
        }
    }
}

/// Which checks to run. Per-vertex checks cost one pass over the component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Checks {
    pub degree: bool,
    pub clique: bool,
    pub triangles: bool,
    pub cube: bool,
    pub orbit_stabilizer: bool,
}

impl Checks {
    pub const ALL: Checks = Checks {
        degree: true,
        clique: true,
        triangles: true,
        cube: true,
        orbit_stabilizer: true,
    };

    pub const NONE: Checks = Checks {
        degree: false,
        clique: false,
        triangles: false,
        cube: false,
        orbit_stabilizer: false,
    };
}

/// A violation and the tableau it was observed at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub violation: Violation,
    pub tableau: LatinTableau,
}

/// Outcome of checking one component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentCheck {
    pub basepoint: LatinTableau,
    pub size: usize,
    pub findings: Vec<Finding>,
}

/// Runs the selected checks on every vertex of the component. Regularity is
/// always checked.
pub fn check_component(graph: &IsotopyGraph, checks: Checks) -> ComponentCheck {
    let mut violations = Vec::new();
    let n = graph.num_vertices();
    let shape = graph.shape();
    let degree = match vertex_degree(graph) {
        Ok(d) => Some(d),
        Err(GraphError::NonRegularComponent { min, max }) => {
            violations.push(Violation::NonRegular { min, max });
            None
        }
        Err(_) => None,
    };

    if checks.degree {
        let (a, b) = shape.same_length_pairs();
        for v in 0..n {
            let d = graph.degree(v);
            if d > a + 2 * b {
                violations.push(Violation::DegreeBound {
                    degree: d,
                    bound: a + 2 * b,
                });
            }
            let tableau = graph.vertex(v);
            let formula = degree_formula(&tableau);
            if formula != d {
                violations.push(Violation::DegreeFormula {
                    vertex: v,
                    degree: d,
                    formula,
                });
            }
            if structural_symmetric_pairs(&tableau) != symmetric_pairs(&tableau) {
                violations.push(Violation::SymmetricPairMismatch { vertex: v });
            }
        }
    }

    if checks.clique {
        if let Err(GraphError::CliqueTheoremViolation { fast, brute_force }) = clique_number(graph)
        {
            violations.push(Violation::Clique { fast, brute_force });
        }
    }

    let stabilizer = stabilizer_order(graph);
    if checks.orbit_stabilizer {
        if let Err(e) = &stabilizer {
            violations.push(Violation::OrbitStabilizer {
                group_order: match e {
                    GraphError::InexactDivision { group_order, .. } => Some(*group_order),
                    _ => None,
                },
                component_size: n,
            });
        }
    }

    if checks.triangles {
        let triangles = find_triangles(graph);
        let mut in_triangle = vec![false; n];
        for &t in &triangles {
            t.iter().for_each(|&x| in_triangle[x] = true);
        }
        for (v, &in_triangle) in in_triangle.iter().enumerate() {
            let witnesses = triangle_witnesses(&graph.vertex(v));
            let has_witness = !witnesses.is_empty();
            let conditions_hold = witnesses.iter().any(|w| w.conditions_hold());
            if in_triangle != has_witness || has_witness != conditions_hold {
                violations.push(Violation::TriangleCharacterization {
                    vertex: v,
                    in_triangle,
                    has_witness,
                    conditions_hold,
                });
            }
        }
        let exempt = shape.parts() == [4, 4];
        for &t in &triangles {
            if !exempt && has_repeated_kind(graph, t) {
                violations.push(Violation::SameTypeEdges { triangle: t });
            }
            if fourth_clique_vertex(graph, t).is_none() {
                violations.push(Violation::TriangleWithoutFourClique { triangle: t });
            }
        }
    }

    if checks.cube && degree.is_some() {
        if let Ok(stabilizer) = stabilizer {
            let cube = is_cube(graph);
            for v in 0..n {
                let p = symmetric_pairs(&graph.vertex(v)).len();
                let criterion = stabilizer_criterion(shape, stabilizer, p);
                if criterion != cube.is_some() {
                    violations.push(Violation::CubeCriterion {
                        vertex: v,
                        criterion,
                        cube,
                    });
                }
            }
        }
    }

    let findings = violations
        .into_iter()
        .map(|violation| Finding {
            tableau: graph.vertex(violation.vertex().unwrap_or(0)),
            violation,
        })
        .collect();
    ComponentCheck {
        basepoint: graph.basepoint(),
        size: n,
        findings,
    }
}

/// Whether two edges of the triangle carry labels of a common kind.
fn has_repeated_kind(graph: &IsotopyGraph, [x, y, z]: [usize; 3]) -> bool {
    let kinds = |p, q| -> [bool; 3] {
        let e = graph.edge_between(p, q).expect("triangle edge");
        let mut k = [false; 3];
        for label in graph.edge_labels(e) {
            k[match label.kind() {
                TransformKind::Row => 0,
                TransformKind::Col => 1,
                TransformKind::Ent => 2,
            }] = true;
        }
        k
    };
    let edges = [kinds(x, y), kinds(y, z), kinds(x, z)];
    (0..3).any(|i| (i + 1..3).any(|j| (0..3).any(|k| edges[i][k] && edges[j][k])))
}

/// Checks of every component of a shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeCheck {
    pub shape: Partition,
    pub components: Vec<ComponentCheck>,
}

impl ShapeCheck {
    pub fn fillings(&self) -> usize {
        self.components.iter().map(|c| c.size).sum()
    }

    pub fn findings(&self) -> impl Iterator<Item = &Finding> {
        self.components.iter().flat_map(|c| &c.findings)
    }

    pub fn passed(&self) -> bool {
        self.components.iter().all(|c| c.findings.is_empty())
    }
}

/// Builds every component of `shape` under `cap` and checks each one.
pub fn check_shape(
    shape: &Partition,
    cap: usize,
    checks: Checks,
) -> Result<ShapeCheck, GraphError> {
    let components = full_graph_with_cap(shape, cap)?
        .iter()
        .map(|g| check_component(g, checks))
        .collect();
    Ok(ShapeCheck {
        shape: shape.clone(),
        components,
    })
}
