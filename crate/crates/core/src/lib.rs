//! Latin tableaux, their isotopy graphs, and the graph invariants that
//! characterize them.
//!
//! The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod constructions;
pub mod enumerate;
pub mod graph;
pub mod invariants;
pub mod partition;
pub mod tableau;
pub mod verify;

pub use enumerate::{
    count_fillings, enumerate_fillings, is_fillable, verify_wpc, Fillings, WpcRecord,
};
pub use graph::{component, full_graph, GraphError, IsotopyGraph, DEFAULT_COMPONENT_CAP};
pub use invariants::{analyze, AnalysisReport, SymmetricPair, TriangleWitness};
pub use partition::{Partition, PartitionError};
pub use tableau::{
    generators, ElementaryTransform, Entry, LatinTableau, TableauError, TransformKind,
};
