//! Isotopy graphs: orbits of a tableau under the elementary transformations.
//!
//! A component is built by breadth-first closure from a basepoint. Vertex ids
//! are discovery ranks and the queue visits generators in the order of
//! [`generators`], so the numbering is reproducible. Transformations that send
//! a vertex to the same neighbour share one edge whose label set lists all of
//! them.

use alloc::vec;
use alloc::vec::Vec;
use core::hash::BuildHasher;

use hashbrown::{DefaultHashBuilder, HashTable};
use thiserror::Error;

use crate::enumerate::enumerate_fillings;
use crate::partition::Partition;
use crate::tableau::{generators, ElementaryTransform, Entry, LatinTableau, Layout};

/// Default bound on the number of vertices of a single component.
pub const DEFAULT_COMPONENT_CAP: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("component exceeds the cap of {cap} vertices")]
    ComponentTooLarge { cap: usize },
    #[error("component is not regular: degrees range from {min} to {max}")]
    NonRegularComponent { min: usize, max: usize },
    #[error(
        "isotopy group order {group_order} is not divisible by component size {component_size}"
    )]
    InexactDivision {
        group_order: u128,
        component_size: usize,
    },
    #[error("isotopy group order of shape {shape} overflows u128")]
    GroupOrderOverflow { shape: Partition },
    #[error(
        "clique number {fast} from the triangle test disagrees with brute force {brute_force}"
    )]
    CliqueTheoremViolation { fast: usize, brute_force: usize },
    #[error("cube criterion says {criterion} but cube recognition found {cube:?}")]
    CriterionMismatch {
        criterion: bool,
        cube: Option<usize>,
    },
}

/// Fixed-width fillings stored back to back, with a hash index on top.
#[derive(Debug, Clone)]
struct VertexStore {
    width: usize,
    cells: Vec<Entry>,
    table: HashTable<u32>,
    hasher: DefaultHashBuilder,
}

impl VertexStore {
    fn new(width: usize) -> Self {
        VertexStore {
            width,
            cells: Vec::new(),
            table: HashTable::new(),
            hasher: DefaultHashBuilder::default(),
        }
    }

    fn len(&self) -> usize {
        self.cells.len() / self.width
    }

    fn get(&self, i: usize) -> &[Entry] {
        &self.cells[i * self.width..(i + 1) * self.width]
    }

    fn find(&self, key: &[Entry]) -> Option<usize> {
        let hash = self.hasher.hash_one(key);
        self.table
            .find(hash, |&i| self.get(i as usize) == key)
            .map(|&i| i as usize)
    }

    /// Returns the id of `key`, inserting it if absent. `None` when inserting
    /// would exceed `cap`.
    fn intern(&mut self, key: &[Entry], cap: usize) -> Option<usize> {
        let hash = self.hasher.hash_one(key);
        let (width, cells, hasher) = (self.width, &self.cells, &self.hasher);
        if let Some(&i) = self.table.find(hash, |&i| {
            &cells[i as usize * width..(i as usize + 1) * width] == key
        }) {
            return Some(i as usize);
        }
        let id = self.len();
        if id >= cap {
            return None;
        }
        self.table.insert_unique(hash, id as u32, |&i| {
            hasher.hash_one(&cells[i as usize * width..(i as usize + 1) * width])
        });
        self.cells.extend_from_slice(key);
        Some(id)
    }
}

/// One connected component of the isotopy graph of a shape.
#[derive(Debug, Clone)]
pub struct IsotopyGraph {
    shape: Partition,
    generators: Vec<ElementaryTransform>,
    vertices: VertexStore,
    /// Endpoints `(u, v)` with `u < v`, sorted.
    edge_ends: Vec<(u32, u32)>,
    /// Edge `e` carries generator indices `labels[label_starts[e]..label_starts[e + 1]]`.
    label_starts: Vec<u32>,
    labels: Vec<u16>,
    /// Neighbours of `x` (with edge ids), ascending: `adj[adj_starts[x]..adj_starts[x + 1]]`.
    adj_starts: Vec<usize>,
    adj: Vec<(u32, u32)>,
}

/// A borrowed view of one edge.
#[derive(Debug, Clone, Copy)]
pub struct EdgeRef<'a> {
    pub id: usize,
    pub u: usize,
    pub v: usize,
    graph: &'a IsotopyGraph,
}

impl<'a> EdgeRef<'a> {
    /// The transformations carrying `u` to `v`, in generator order.
    pub fn labels(&self) -> impl Iterator<Item = ElementaryTransform> + 'a {
        self.graph.edge_labels(self.id)
    }
}

impl IsotopyGraph {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn generators(&self) -> &[ElementaryTransform] {
        &self.generators
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edge_ends.len()
    }

    pub fn vertex_cells(&self, i: usize) -> &[Entry] {
        self.vertices.get(i)
    }

    pub fn vertex(&self, i: usize) -> LatinTableau {
        LatinTableau::from_cells_unchecked(self.shape.clone(), self.vertices.get(i).to_vec())
    }

    /// Vertex 0, the tableau the closure started from.
    pub fn basepoint(&self) -> LatinTableau {
        self.vertex(0)
    }

    pub fn index_of(&self, tableau: &LatinTableau) -> Option<usize> {
        if tableau.shape() != &self.shape {
            return None;
        }
        self.vertices.find(tableau.cells())
    }

    pub fn edge(&self, id: usize) -> EdgeRef<'_> {
        let (u, v) = self.edge_ends[id];
        EdgeRef {
            id,
            u: u as usize,
            v: v as usize,
            graph: self,
        }
    }

    /// Edges sorted by `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = EdgeRef<'_>> + '_ {
        (0..self.num_edges()).map(move |e| self.edge(e))
    }

    pub fn edge_labels(&self, id: usize) -> impl Iterator<Item = ElementaryTransform> + '_ {
        let range = self.label_starts[id] as usize..self.label_starts[id + 1] as usize;
        self.labels[range]
            .iter()
            .map(move |&g| self.generators[g as usize])
    }

    /// `(neighbour, edge id)` pairs in ascending neighbour order.
    pub fn neighbors(&self, x: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj[self.adj_starts[x]..self.adj_starts[x + 1]]
            .iter()
            .map(|&(n, e)| (n as usize, e as usize))
    }

    pub(crate) fn neighbor_ids(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.neighbors(x).map(|(n, _)| n)
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adj_starts[x + 1] - self.adj_starts[x]
    }

    /// The edge joining `x` and `y`, if any.
    pub fn edge_between(&self, x: usize, y: usize) -> Option<usize> {
        let row = &self.adj[self.adj_starts[x]..self.adj_starts[x + 1]];
        row.binary_search_by_key(&(y as u32), |&(n, _)| n)
            .ok()
            .map(|i| row[i].1 as usize)
    }

    pub fn are_adjacent(&self, x: usize, y: usize) -> bool {
        self.edge_between(x, y).is_some()
    }
}

/// The component containing `tableau`, with the default vertex cap.
pub fn component(tableau: &LatinTableau) -> Result<IsotopyGraph, GraphError> {
    component_with_cap(tableau, DEFAULT_COMPONENT_CAP)
}

pub fn component_with_cap(tableau: &LatinTableau, cap: usize) -> Result<IsotopyGraph, GraphError> {
    let shape = tableau.shape().clone();
    let layout = Layout::new(&shape);
    let gens = generators(&shape);
    let width = shape.total();
    let mut vertices = VertexStore::new(width);
    vertices
        .intern(tableau.cells(), cap)
        .ok_or(GraphError::ComponentTooLarge { cap })?;

    let mut edge_ends = Vec::new();
    let mut label_starts = vec![0u32];
    let mut labels = Vec::new();
    let mut buf = vec![0; width];
    let mut hits: Vec<(u32, u16)> = Vec::with_capacity(gens.len());
    let mut head = 0;
    while head < vertices.len() {
        hits.clear();
        for (gi, g) in gens.iter().enumerate() {
            buf.copy_from_slice(vertices.get(head));
            g.act(&layout, &mut buf);
            let target = vertices
                .intern(&buf, cap)
                .ok_or(GraphError::ComponentTooLarge { cap })?;
            debug_assert_ne!(
                target, head,
                "an elementary transformation never fixes a tableau"
            );
            // Edges to earlier vertices were recorded when those were visited.
            if target > head {
                hits.push((target as u32, gi as u16));
            }
        }
        hits.sort_unstable();
        let mut i = 0;
        while i < hits.len() {
            let target = hits[i].0;
            edge_ends.push((head as u32, target));
            while i < hits.len() && hits[i].0 == target {
                labels.push(hits[i].1);
                i += 1;
            }
            label_starts.push(labels.len() as u32);
        }
        head += 1;
    }

    let n = vertices.len();
    let mut adj_starts = vec![0usize; n + 1];
    for &(u, v) in &edge_ends {
        adj_starts[u as usize + 1] += 1;
        adj_starts[v as usize + 1] += 1;
    }
    for x in 0..n {
        adj_starts[x + 1] += adj_starts[x];
    }
    let mut fill = adj_starts.clone();
    let mut adj = vec![(0u32, 0u32); edge_ends.len() * 2];
    for (e, &(u, v)) in edge_ends.iter().enumerate() {
        adj[fill[u as usize]] = (v, e as u32);
        fill[u as usize] += 1;
        adj[fill[v as usize]] = (u, e as u32);
        fill[v as usize] += 1;
    }

    Ok(IsotopyGraph {
        shape,
        generators: gens,
        vertices,
        edge_ends,
        label_starts,
        labels,
        adj_starts,
        adj,
    })
}

/// All components of the isotopy graph of `shape`, ordered by their minimal
/// filling (which is also each component's basepoint).
pub fn full_graph(shape: &Partition) -> Result<Vec<IsotopyGraph>, GraphError> {
    full_graph_with_cap(shape, DEFAULT_COMPONENT_CAP)
}

pub fn full_graph_with_cap(shape: &Partition, cap: usize) -> Result<Vec<IsotopyGraph>, GraphError> {
    let mut components: Vec<IsotopyGraph> = Vec::new();
    let mut seen = VertexStore::new(shape.total());
    // Fillings arrive in lexicographic order, so the first unseen one is the
    // minimum of its component.
    for filling in enumerate_fillings(shape) {
        if seen.find(filling.cells()).is_some() {
            continue;
        }
        let graph = component_with_cap(&filling, cap)?;
        for i in 0..graph.num_vertices() {
            seen.intern(graph.vertex_cells(i), usize::MAX);
        }
        components.push(graph);
    }
    Ok(components)
}

/// Size and degree range of a component, computed without storing edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSummary {
    pub basepoint: LatinTableau,
    pub size: usize,
    pub min_degree: usize,
    pub max_degree: usize,
}

impl OrbitSummary {
    pub fn is_regular(&self) -> bool {
        self.min_degree == self.max_degree
    }
}

/// Breadth-first orbit of `tableau`, recording only vertex degrees. Suitable
/// for orbits too large to hold as a full [`IsotopyGraph`].
pub fn orbit_summary(tableau: &LatinTableau, cap: usize) -> Result<OrbitSummary, GraphError> {
    let mut vertices = VertexStore::new(tableau.shape().total());
    let summary = explore_orbit(tableau, cap, &mut vertices)?;
    Ok(summary)
}

fn explore_orbit(
    tableau: &LatinTableau,
    cap: usize,
    vertices: &mut VertexStore,
) -> Result<OrbitSummary, GraphError> {
    let shape = tableau.shape();
    let layout = Layout::new(shape);
    let gens = generators(shape);
    let first = vertices.len();
    vertices
        .intern(tableau.cells(), cap)
        .ok_or(GraphError::ComponentTooLarge { cap })?;
    let mut buf = vec![0; shape.total()];
    let mut targets = Vec::with_capacity(gens.len());
    let (mut min_degree, mut max_degree) = (usize::MAX, 0);
    let mut head = first;
    while head < vertices.len() {
        targets.clear();
        for g in &gens {
            buf.copy_from_slice(vertices.get(head));
            g.act(&layout, &mut buf);
            let id = vertices
                .intern(&buf, cap.saturating_add(first))
                .ok_or(GraphError::ComponentTooLarge { cap })?;
            targets.push(id);
        }
        targets.sort_unstable();
        targets.dedup();
        min_degree = min_degree.min(targets.len());
        max_degree = max_degree.max(targets.len());
        head += 1;
    }
    Ok(OrbitSummary {
        basepoint: tableau.clone(),
        size: vertices.len() - first,
        min_degree,
        max_degree,
    })
}

/// Orbit summaries for every component of `shape`, ordered by minimal filling.
pub fn orbit_summaries(shape: &Partition, cap: usize) -> Result<Vec<OrbitSummary>, GraphError> {
    let mut vertices = VertexStore::new(shape.total());
    let mut out = Vec::new();
    for filling in enumerate_fillings(shape) {
        if vertices.find(filling.cells()).is_some() {
            continue;
        }
        out.push(explore_orbit(&filling, cap, &mut vertices)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&str]) -> LatinTableau {
        LatinTableau::from_compact(rows).unwrap()
    }

    fn shape(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn single_row_of_two() {
        let g = component(&t(&["12"])).unwrap();
        assert_eq!(g.num_vertices(), 2);
        assert_eq!(g.num_edges(), 1);
        let labels: Vec<_> = g.edge(0).labels().collect();
        assert_eq!(
            labels,
            [
                ElementaryTransform::col(0, 1),
                ElementaryTransform::ent(0, 1)
            ]
        );
    }

    #[test]
    fn staircase_is_a_point() {
        let g = component(&t(&["321", "21", "1"])).unwrap();
        assert_eq!(g.num_vertices(), 1);
        assert_eq!(g.num_edges(), 0);
    }

    #[test]
    fn t2_is_a_four_cycle() {
        let g = component(&t(&["312", "12"])).unwrap();
        assert_eq!(g.num_vertices(), 4);
        assert_eq!(g.num_edges(), 4);
        assert!((0..4).all(|x| g.degree(x) == 2));
        // Opposite corners of the square are not adjacent.
        let far = (1..4).find(|&y| !g.are_adjacent(0, y)).unwrap();
        assert_eq!(g.neighbor_ids(far).count(), 2);
    }

    #[test]
    fn full_graph_examples() {
        let sizes = |s: &[usize]| -> Vec<usize> {
            full_graph(&shape(s))
                .unwrap()
                .iter()
                .map(|g| g.num_vertices())
                .collect()
        };
        assert_eq!(sizes(&[3, 2]), [2, 4]);
        assert_eq!(sizes(&[2]), [2]);
        assert_eq!(sizes(&[3, 3, 3]), [12]);
    }

    #[test]
    fn cap_is_enforced() {
        let err = component_with_cap(&t(&["1234"]), 10).unwrap_err();
        assert_eq!(err, GraphError::ComponentTooLarge { cap: 10 });
        assert!(component_with_cap(&t(&["1234"]), 24).is_ok());
        assert!(orbit_summary(&t(&["1234"]), 23).is_err());
    }

    #[test]
    fn orbit_summary_matches_graph() {
        let s = shape(&[4, 4, 2]);
        let graphs = full_graph(&s).unwrap();
        let summaries = orbit_summaries(&s, DEFAULT_COMPONENT_CAP).unwrap();
        assert_eq!(graphs.len(), summaries.len());
        for (g, o) in graphs.iter().zip(&summaries) {
            assert_eq!(g.num_vertices(), o.size);
            assert_eq!(g.basepoint(), o.basepoint);
            let degrees: Vec<_> = (0..g.num_vertices()).map(|x| g.degree(x)).collect();
            assert_eq!(*degrees.iter().min().unwrap(), o.min_degree);
            assert_eq!(*degrees.iter().max().unwrap(), o.max_degree);
        }
    }

    #[test]
    fn edges_are_sorted_and_adjacency_symmetric() {
        let g = component(&t(&["1234", "2143"])).unwrap();
        let ends: Vec<_> = g.edges().map(|e| (e.u, e.v)).collect();
        assert!(ends.windows(2).all(|w| w[0] < w[1]));
        for e in g.edges() {
            assert!(e.u < e.v);
            assert_eq!(g.edge_between(e.u, e.v), Some(e.id));
            assert_eq!(g.edge_between(e.v, e.u), Some(e.id));
        }
    }
}
