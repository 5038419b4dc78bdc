//! File formats, parallel drivers and the command-line interface for
//! Latin tableau isotopy graphs.

pub mod cli;
pub mod format;
pub mod run;

pub use isotopy_core;
