//! Parallel drivers for the exhaustive searches. Work is spread over shapes
//! (or first-row prefixes) with rayon; results always come back in canonical
//! order.

use std::fmt;

use isotopy_core::enumerate::{split_prefixes, verify_wpc, Fillings, WpcRecord};
use isotopy_core::graph::GraphError;
use isotopy_core::partition::{partitions_up_to, Partition};
use isotopy_core::tableau::LatinTableau;
use isotopy_core::verify::{check_shape, Checks};
use rayon::prelude::*;

/// Runs `f` on a pool of `jobs` threads, or on rayon's default pool when
/// `jobs` is zero.
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs == 0 {
        return f();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool")
        .install(f)
}

/// Number of fillings, split over first-row prefixes.
pub fn count_fillings(shape: &Partition) -> u64 {
    split_prefixes(shape, 2)
        .par_iter()
        .map(|prefix| Fillings::with_prefix(shape, prefix).count_remaining())
        .sum()
}

/// Wideness against fillability for every shape with at most `max_boxes`
/// boxes, in the order of [`partitions_up_to`].
pub fn verify_wpc_range(max_boxes: usize, count: bool) -> Vec<WpcRecord> {
    partitions_up_to(max_boxes)
        .into_par_iter()
        .map(|shape| {
            if count {
                let n = count_fillings(&shape);
                WpcRecord::new(shape.clone(), shape.is_wide(), n > 0, Some(n))
            } else {
                verify_wpc(&shape, false)
            }
        })
        .collect()
}

/// A failed check on a specific tableau.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub check: &'static str,
    pub shape: Partition,
    pub tableau: LatinTableau,
    pub detail: String,
}

/// A shape left unchecked because one of its components exceeded the cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skipped {
    pub shape: Partition,
    pub cap: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationSummary {
    pub max_boxes: usize,
    pub shapes: usize,
    pub components: usize,
    pub fillings: u64,
    /// Fillings checked times the number of check families.
    pub checks_run: u64,
    pub failures: Vec<Failure>,
    pub skipped: Vec<Skipped>,
}

/// Regularity, degree, clique, triangle, cube and orbit–stabilizer.
const CHECK_FAMILIES: u64 = 6;

impl VerificationSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for VerificationSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for failure in &self.failures {
            let rows: Vec<String> = failure
                .tableau
                .rows()
                .map(|r| {
                    r.iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            writeln!(
                f,
                "FAIL {} shape {} tableau [{}]: {}",
                failure.check,
                failure.shape,
                rows.join(" / "),
                failure.detail
            )?;
        }
        for s in &self.skipped {
            writeln!(
                f,
                "SKIPPED shape {}: a component exceeds the cap of {} vertices",
                s.shape, s.cap
            )?;
        }
        writeln!(
            f,
            "shapes with at most {} boxes: {} shapes, {} components, {} fillings, {} checks, {} failures, {} skipped",
            self.max_boxes,
            self.shapes,
            self.components,
            self.fillings,
            self.checks_run,
            self.failures.len(),
            self.skipped.len()
        )
    }
}

/// Checks every component of every shape with at most `max_boxes` boxes.
/// Shapes with a component larger than `cap` are skipped and listed.
pub fn verify_theorems(max_boxes: usize, cap: usize) -> VerificationSummary {
    let shapes = partitions_up_to(max_boxes);
    let results: Vec<_> = shapes
        .par_iter()
        .map(|shape| (shape, check_shape(shape, cap, Checks::ALL)))
        .collect();
    let mut summary = VerificationSummary {
        max_boxes,
        shapes: shapes.len(),
        components: 0,
        fillings: 0,
        checks_run: 0,
        failures: Vec::new(),
        skipped: Vec::new(),
    };
    for (shape, result) in results {
        match result {
            Ok(check) => {
                summary.components += check.components.len();
                summary.fillings += check.fillings() as u64;
                summary.checks_run += check.fillings() as u64 * CHECK_FAMILIES;
                summary.failures.extend(check.findings().map(|f| Failure {
                    check: f.violation.check(),
                    shape: shape.clone(),
                    tableau: f.tableau.clone(),
                    detail: f.violation.to_string(),
                }));
            }
            Err(GraphError::ComponentTooLarge { cap }) => summary.skipped.push(Skipped {
                shape: shape.clone(),
                cap,
            }),
            Err(e) => summary.failures.push(Failure {
                check: "construction",
                shape: shape.clone(),
                tableau: LatinTableau::from_rows(&[[1]]).expect("trivial tableau"),
                detail: e.to_string(),
            }),
        }
    }
    summary
}
