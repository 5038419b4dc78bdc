//! Invariants of isotopy graphs: degree, symmetric column pairs, stabilizer
//! order, triangles, clique number and cube recognition.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::graph::{GraphError, IsotopyGraph};
use crate::partition::Partition;
use crate::tableau::{generators, ElementaryTransform, Entry, LatinTableau, Layout, TransformKind};

/// Components up to this size have their clique number confirmed by an
/// exhaustive maximum-clique search.
pub const BRUTE_FORCE_CLIQUE_LIMIT: usize = 4096;

/// Columns `i`, `j` whose swap acts on a tableau exactly as swapping the
/// entries `x`, `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymmetricPair {
    pub columns: ElementaryTransform,
    pub entries: ElementaryTransform,
}

/// Symmetric pairs found by applying each column swap and its only possible
/// entry-swap partner.
///
/// Both columns of a pair start in the first row, so a swap of entries that
/// mimics `c(i,j)` must exchange `T(1,i)` and `T(1,j)`.
pub fn symmetric_pairs(tableau: &LatinTableau) -> Vec<SymmetricPair> {
    let shape = tableau.shape();
    let layout = Layout::new(shape);
    let mut out = Vec::new();
    let (mut by_col, mut by_ent) = (tableau.cells().to_vec(), tableau.cells().to_vec());
    for columns in generators(shape)
        .into_iter()
        .filter(|g| g.kind() == TransformKind::Col)
    {
        let (i, j) = columns.pair();
        let (x, y) = (tableau.cells()[i], tableau.cells()[j]);
        let entries = ElementaryTransform::ent(x.min(y) as usize - 1, x.max(y) as usize - 1);
        if !entries.is_legal_for(shape) {
            continue;
        }
        by_col.copy_from_slice(tableau.cells());
        by_ent.copy_from_slice(tableau.cells());
        columns.act(&layout, &mut by_col);
        entries.act(&layout, &mut by_ent);
        if by_col == by_ent {
            out.push(SymmetricPair { columns, entries });
        }
    }
    out
}

/// Symmetric pairs read off the two structural patterns: a pair of
/// single-box columns in the first row holding entries larger than the second
/// row, or a pair of two-box columns forming an `xy/yx` block with entries
/// larger than the third row.
pub fn structural_symmetric_pairs(tableau: &LatinTableau) -> Vec<SymmetricPair> {
    let shape = tableau.shape();
    let mut out = Vec::new();
    for top in 0..2 {
        let (n, m) = (shape.part(top), shape.part(top + 1));
        if n <= m {
            continue;
        }
        let big = |v: Entry| v as usize > m;
        for i in m..n {
            for j in i + 1..n {
                let (x, y) = (tableau.get(0, i).unwrap(), tableau.get(0, j).unwrap());
                let ok = big(x)
                    && big(y)
                    && (top == 0 || (tableau.get(1, i) == Some(y) && tableau.get(1, j) == Some(x)));
                if ok {
                    out.push(SymmetricPair {
                        columns: ElementaryTransform::col(i, j),
                        entries: ElementaryTransform::ent(
                            x.min(y) as usize - 1,
                            x.max(y) as usize - 1,
                        ),
                    });
                }
            }
        }
    }
    out.sort();
    out
}

/// `a + 2b - p`: same-length row pairs, plus twice the same-length column
/// pairs, minus the symmetric pairs of the tableau.
pub fn degree_formula(tableau: &LatinTableau) -> usize {
    let (a, b) = tableau.shape().same_length_pairs();
    a + 2 * b - symmetric_pairs(tableau).len()
}

/// The common degree of all vertices of the component.
pub fn vertex_degree(graph: &IsotopyGraph) -> Result<usize, GraphError> {
    let (mut min, mut max) = (usize::MAX, 0);
    for x in 0..graph.num_vertices() {
        let d = graph.degree(x);
        min = min.min(d);
        max = max.max(d);
    }
    if min != max {
        return Err(GraphError::NonRegularComponent { min, max });
    }
    Ok(min)
}

/// `|S(shape)| / component size`.
pub fn stabilizer_order(graph: &IsotopyGraph) -> Result<u128, GraphError> {
    let group_order =
        graph
            .shape()
            .isotopy_group_order()
            .ok_or_else(|| GraphError::GroupOrderOverflow {
                shape: graph.shape().clone(),
            })?;
    let size = graph.num_vertices() as u128;
    if group_order % size != 0 {
        return Err(GraphError::InexactDivision {
            group_order,
            component_size: graph.num_vertices(),
        });
    }
    Ok(group_order / size)
}

/// Every triangle `[x, y, z]` with `x < y < z`, in lexicographic order.
pub fn find_triangles(graph: &IsotopyGraph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for_each_triangle(graph, |t| {
        out.push(t);
        true
    });
    out
}

pub fn has_triangle(graph: &IsotopyGraph) -> bool {
    let mut found = false;
    for_each_triangle(graph, |_| {
        found = true;
        false
    });
    found
}

/// Calls `visit` on triangles in lexicographic order until it returns false.
fn for_each_triangle(graph: &IsotopyGraph, mut visit: impl FnMut([usize; 3]) -> bool) {
    for e in graph.edges() {
        let (x, y) = (e.u, e.v);
        let mut a = graph.neighbor_ids(x).filter(|&w| w > y).peekable();
        let mut b = graph.neighbor_ids(y).filter(|&w| w > y).peekable();
        while let (Some(&p), Some(&q)) = (a.peek(), b.peek()) {
            if p < q {
                a.next();
            } else if q < p {
                b.next();
            } else {
                if !visit([x, y, p]) {
                    return;
                }
                a.next();
                b.next();
            }
        }
    }
}

/// A vertex adjacent to all three corners of the triangle, if one exists.
pub fn fourth_clique_vertex(graph: &IsotopyGraph, triangle: [usize; 3]) -> Option<usize> {
    let [x, y, z] = triangle;
    graph
        .neighbor_ids(x)
        .find(|&w| w != y && w != z && graph.are_adjacent(w, y) && graph.are_adjacent(w, z))
}

/// How the four corner boxes of the row and column pair are filled, with
/// `a` standing for the swapped entries and `b` for the other two of `1..=4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CornerPattern {
    /// `bi bj / bj bi`: both diagonals constant outside `{a1, a2}`.
    Fixed,
    /// `ai bk / bk aj`: the main diagonal holds `{a1, a2}`.
    MainDiagonal,
    /// `bk ai / aj bk`: the anti-diagonal holds `{a1, a2}`.
    AntiDiagonal,
}

/// A row swap `r`, column swap `c` and entry swap `s` with `rc(T) = s(T)`,
/// together with the structural conditions that characterize such triples.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TriangleWitness {
    pub row: ElementaryTransform,
    pub col: ElementaryTransform,
    pub ent: ElementaryTransform,
    /// Both swapped entries lie in `1..=4`.
    pub entries_at_most_four: bool,
    /// Boxes in the two rows outside the two columns, and in the two columns
    /// outside the two rows, hold only the swapped entries.
    pub outside_square: bool,
    /// The swapped entries occur nowhere else.
    pub fixed_elsewhere: bool,
    /// Entries at `(i1,j1), (i1,j2), (i2,j1), (i2,j2)` when those boxes exist.
    pub corners: Option<[Entry; 4]>,
    pub corner_pattern: Option<CornerPattern>,
}

impl TriangleWitness {
    pub fn conditions_hold(&self) -> bool {
        self.entries_at_most_four
            && self.outside_square
            && self.fixed_elsewhere
            && (self.corners.is_none() || self.corner_pattern.is_some())
    }
}

/// All `(r, c, s)` with `rc(T) = s(T)`.
///
/// For each `r` and `c`, `rc(T)` differs from `T` somewhere, and the first
/// difference fixes the only candidate `s`.
pub fn triangle_witnesses(tableau: &LatinTableau) -> Vec<TriangleWitness> {
    let shape = tableau.shape();
    let layout = Layout::new(shape);
    let gens = generators(shape);
    let kind = |k| {
        gens.iter()
            .copied()
            .filter(move |g: &ElementaryTransform| g.kind() == k)
    };
    let cells = tableau.cells();
    let mut rc = cells.to_vec();
    let mut by_ent = cells.to_vec();
    let mut out = Vec::new();
    for row in kind(TransformKind::Row) {
        for col in kind(TransformKind::Col) {
            rc.copy_from_slice(cells);
            col.act(&layout, &mut rc);
            row.act(&layout, &mut rc);
            let Some(k) = (0..cells.len()).find(|&k| rc[k] != cells[k]) else {
                continue;
            };
            let (x, y) = (cells[k].min(rc[k]), cells[k].max(rc[k]));
            let ent = ElementaryTransform::ent(x as usize - 1, y as usize - 1);
            if !ent.is_legal_for(shape) {
                continue;
            }
            by_ent.copy_from_slice(cells);
            ent.act(&layout, &mut by_ent);
            if by_ent == rc {
                out.push(witness_conditions(tableau, row, col, ent));
            }
        }
    }
    out
}

fn witness_conditions(
    tableau: &LatinTableau,
    row: ElementaryTransform,
    col: ElementaryTransform,
    ent: ElementaryTransform,
) -> TriangleWitness {
    let (i1, i2) = row.pair();
    let (j1, j2) = col.pair();
    let (a1, a2) = ent.entries();
    let is_a = |v: Entry| v == a1 || v == a2;
    let (mut outside_square, mut fixed_elsewhere) = (true, true);
    for (i, r) in tableau.rows().enumerate() {
        for (j, &v) in r.iter().enumerate() {
            let in_rows = i == i1 || i == i2;
            let in_cols = j == j1 || j == j2;
            if in_rows != in_cols && !is_a(v) {
                outside_square = false;
            }
            if !in_rows && !in_cols && is_a(v) {
                fixed_elsewhere = false;
            }
        }
    }
    let corners = (|| {
        Some([
            tableau.get(i1, j1)?,
            tableau.get(i1, j2)?,
            tableau.get(i2, j1)?,
            tableau.get(i2, j2)?,
        ])
    })();
    let corner_pattern = corners.and_then(|[p, q, r, t]| {
        let is_b = |v: Entry| (1..=4).contains(&v) && !is_a(v);
        let constant_b = |u: Entry, v: Entry| u == v && is_b(u);
        let swapped_a = |u: Entry, v: Entry| u != v && is_a(u) && is_a(v);
        if constant_b(p, t) && constant_b(q, r) {
            Some(CornerPattern::Fixed)
        } else if swapped_a(p, t) && constant_b(q, r) {
            Some(CornerPattern::MainDiagonal)
        } else if constant_b(p, t) && swapped_a(q, r) {
            Some(CornerPattern::AntiDiagonal)
        } else {
            None
        }
    });
    TriangleWitness {
        row,
        col,
        ent,
        entries_at_most_four: a2 <= 4,
        outside_square,
        fixed_elsewhere,
        corners,
        corner_pattern,
    }
}

/// Clique number from the triangle test: 1 without edges, 4 with a triangle,
/// 2 otherwise. Components within [`BRUTE_FORCE_CLIQUE_LIMIT`] are confirmed by
/// [`max_clique_size`].
pub fn clique_number(graph: &IsotopyGraph) -> Result<usize, GraphError> {
    let fast = if graph.num_edges() == 0 {
        1
    } else if has_triangle(graph) {
        4
    } else {
        2
    };
    if graph.num_vertices() <= BRUTE_FORCE_CLIQUE_LIMIT {
        let brute_force = max_clique_size(graph);
        if brute_force != fast {
            return Err(GraphError::CliqueTheoremViolation { fast, brute_force });
        }
    }
    Ok(fast)
}

/// Size of a maximum clique, by Bron–Kerbosch with pivoting. Each vertex
/// roots a search over its later neighbours, so candidate sets stay within
/// one neighbourhood.
pub fn max_clique_size(graph: &IsotopyGraph) -> usize {
    fn intersect(set: &[usize], graph: &IsotopyGraph, v: usize) -> Vec<usize> {
        set.iter()
            .copied()
            .filter(|&w| graph.are_adjacent(v, w))
            .collect()
    }
    fn expand(
        graph: &IsotopyGraph,
        size: usize,
        mut p: Vec<usize>,
        mut x: Vec<usize>,
        best: &mut usize,
    ) {
        if p.is_empty() {
            *best = (*best).max(size);
            return;
        }
        if size + p.len() <= *best {
            return;
        }
        let pivot = p
            .iter()
            .chain(&x)
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&w| graph.are_adjacent(u, w)).count())
            .unwrap();
        let candidates: Vec<usize> = p
            .iter()
            .copied()
            .filter(|&v| !graph.are_adjacent(pivot, v))
            .collect();
        for v in candidates {
            expand(
                graph,
                size + 1,
                intersect(&p, graph, v),
                intersect(&x, graph, v),
                best,
            );
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let n = graph.num_vertices();
    let mut best = usize::from(n > 0);
    for v in 0..n {
        let later = graph.neighbor_ids(v).filter(|&w| w > v).collect();
        let earlier = graph.neighbor_ids(v).filter(|&w| w < v).collect();
        expand(graph, 1, later, earlier, &mut best);
    }
    best
}

/// The dimension `d` when the component is isomorphic to the `d`-cube.
///
/// Edges are first grouped by label set; when every vertex meets exactly one
/// edge of each group the groups serve as coordinates. When label sets vary
/// across the component, coordinates are instead assembled layer by layer
/// from a breadth-first search. Either way the result is accepted only if the
/// coordinates are a bijection onto `{0,1}^d` and every edge flips one bit.
pub fn is_cube(graph: &IsotopyGraph) -> Option<usize> {
    let d = vertex_degree(graph).ok()?;
    let n = graph.num_vertices();
    if d >= usize::BITS as usize - 1 || n != 1 << d {
        return None;
    }
    let coords = label_coordinates(graph, d).or_else(|| layered_coordinates(graph, d))?;
    let mut hit = vec![false; n];
    for &c in &coords {
        if core::mem::replace(&mut hit[c as usize], true) {
            return None;
        }
    }
    graph
        .edges()
        .all(|e| (coords[e.u] ^ coords[e.v]).count_ones() == 1)
        .then_some(d)
}

fn label_coordinates(graph: &IsotopyGraph, d: usize) -> Option<Vec<u64>> {
    let mut class_of: HashMap<Vec<ElementaryTransform>, usize> = HashMap::new();
    let mut edge_class = Vec::with_capacity(graph.num_edges());
    for e in graph.edges() {
        let next = class_of.len();
        edge_class.push(*class_of.entry(e.labels().collect()).or_insert(next));
    }
    if class_of.len() != d {
        return None;
    }
    let mut seen = vec![false; d];
    for x in 0..graph.num_vertices() {
        seen.iter_mut().for_each(|s| *s = false);
        for (_, e) in graph.neighbors(x) {
            if core::mem::replace(&mut seen[edge_class[e]], true) {
                return None;
            }
        }
    }
    let mut coords = vec![u64::MAX; graph.num_vertices()];
    coords[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for (y, e) in graph.neighbors(x) {
            let c = coords[x] ^ (1 << edge_class[e]);
            if coords[y] == u64::MAX {
                coords[y] = c;
                queue.push_back(y);
            } else if coords[y] != c {
                return None;
            }
        }
    }
    Some(coords)
}

fn layered_coordinates(graph: &IsotopyGraph, d: usize) -> Option<Vec<u64>> {
    let n = graph.num_vertices();
    let mut depth = vec![usize::MAX; n];
    let mut coords = vec![0u64; n];
    depth[0] = 0;
    let mut queue = VecDeque::from([0]);
    let mut next_bit = 0;
    while let Some(x) = queue.pop_front() {
        for y in graph.neighbor_ids(x) {
            if depth[y] != usize::MAX {
                continue;
            }
            depth[y] = depth[x] + 1;
            queue.push_back(y);
            if depth[y] == 1 {
                coords[y] = 1 << next_bit;
                next_bit += 1;
            } else {
                let below: Vec<usize> = graph
                    .neighbor_ids(y)
                    .filter(|&z| depth[z] == depth[x])
                    .collect();
                coords[y] = below.iter().fold(0, |acc, &z| acc | coords[z]);
                if below.len() != depth[y] || coords[y].count_ones() as usize != depth[y] {
                    return None;
                }
            }
        }
    }
    (next_bit == d).then_some(coords)
}

/// Squareable shape and a stabilizer of order exactly `2^p`.
pub fn stabilizer_criterion(shape: &Partition, stabilizer: u128, symmetric_pairs: usize) -> bool {
    shape.is_squareable()
        && u32::try_from(symmetric_pairs).is_ok_and(|p| 1u128.checked_shl(p) == Some(stabilizer))
}

/// The cube criterion for the component's basepoint, required to agree with
/// [`is_cube`].
pub fn cube_criterion(graph: &IsotopyGraph) -> Result<bool, GraphError> {
    let basepoint = graph.basepoint();
    let criterion = stabilizer_criterion(
        graph.shape(),
        stabilizer_order(graph)?,
        symmetric_pairs(&basepoint).len(),
    );
    let cube = is_cube(graph);
    if criterion != cube.is_some() {
        return Err(GraphError::CriterionMismatch { criterion, cube });
    }
    Ok(criterion)
}

/// Invariants of one component, computed from its basepoint and its edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub shape: Partition,
    pub component_size: usize,
    pub degree: usize,
    pub degree_formula: usize,
    pub symmetric_pairs: Vec<SymmetricPair>,
    pub stabilizer_order: u128,
    pub has_triangle: bool,
    pub clique_number: usize,
    pub cube_dimension: Option<usize>,
    /// Squareable shape with stabilizer order `2^p`.
    pub cube_criterion: bool,
}

impl AnalysisReport {
    /// Computes every field. Mismatches between the degree formula and the
    /// degree, or between the cube criterion and cube recognition, are
    /// reported in the fields rather than raised.
    pub fn new(graph: &IsotopyGraph) -> Result<Self, GraphError> {
        let basepoint = graph.basepoint();
        let pairs = symmetric_pairs(&basepoint);
        let stabilizer = stabilizer_order(graph)?;
        Ok(AnalysisReport {
            shape: graph.shape().clone(),
            component_size: graph.num_vertices(),
            degree: vertex_degree(graph)?,
            degree_formula: degree_formula(&basepoint),
            stabilizer_order: stabilizer,
            has_triangle: has_triangle(graph),
            clique_number: clique_number(graph)?,
            cube_dimension: is_cube(graph),
            cube_criterion: stabilizer_criterion(graph.shape(), stabilizer, pairs.len()),
            symmetric_pairs: pairs,
        })
    }
}

pub fn analyze(graph: &IsotopyGraph) -> Result<AnalysisReport, GraphError> {
    AnalysisReport::new(graph)
}
