//! Exhaustive generation of Latin fillings and the wide-partition check.
//!
//! Fillings are produced by a cell-by-cell backtracking search in row-major
//! order, always trying the smallest admissible entry first, so the stream is
//! in lexicographic order of the row-major cell vector.

use alloc::vec;
use alloc::vec::Vec;

use crate::partition::{partitions_up_to, Partition};
use crate::tableau::{Entry, LatinTableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

/// Iterator over every Latin tableau of a shape, optionally restricted to
/// those whose first cells equal a fixed prefix.
#[derive(Debug, Clone)]
pub struct Fillings {
    shape: Partition,
    /// (row, column) of each cell in row-major order.
    positions: Vec<(usize, usize)>,
    cells: Vec<Entry>,
    stride: usize,
    row_used: Vec<bool>,
    col_used: Vec<bool>,
    floor: usize,
    state: State,
}

impl Fillings {
    pub fn new(shape: &Partition) -> Self {
        let stride = shape.width() + 1;
        let positions = shape
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
            .collect::<Vec<_>>();
        Fillings {
            cells: vec![0; positions.len()],
            positions,
            stride,
            row_used: vec![false; shape.num_rows() * stride],
            col_used: vec![false; shape.width() * stride],
            shape: shape.clone(),
            floor: 0,
            state: State::Fresh,
        }
    }

    /// Fillings whose first `prefix.len()` cells (row-major) equal `prefix`.
    /// Yields nothing when the prefix already violates a Latin constraint.
    pub fn with_prefix(shape: &Partition, prefix: &[Entry]) -> Self {
        let mut it = Fillings::new(shape);
        if prefix.len() > it.cells.len() {
            it.state = State::Done;
            return it;
        }
        for (k, &v) in prefix.iter().enumerate() {
            let (r, c) = it.positions[k];
            let vi = v as usize;
            if vi == 0
                || vi > it.shape.part(r)
                || it.row_used[r * it.stride + vi]
                || it.col_used[c * it.stride + vi]
            {
                it.state = State::Done;
                return it;
            }
            it.mark(k, v, true);
        }
        it.floor = prefix.len();
        it
    }

    fn mark(&mut self, k: usize, v: Entry, used: bool) {
        let (r, c) = self.positions[k];
        self.cells[k] = v;
        self.row_used[r * self.stride + v as usize] = used;
        self.col_used[c * self.stride + v as usize] = used;
    }

    /// Advances to the next complete filling, leaving it in `self.cells`.
    fn advance(&mut self) -> bool {
        let n = self.cells.len();
        let mut k = match self.state {
            State::Done => return false,
            State::Fresh => {
                self.state = State::Running;
                if self.floor == n {
                    return true;
                }
                self.floor
            }
            State::Running => {
                if self.floor == n {
                    self.state = State::Done;
                    return false;
                }
                let last = n - 1;
                let v = self.cells[last];
                self.mark(last, v, false);
                last
            }
        };
        // `cells[k]` holds the last value tried at position k (0 = none yet),
        // and is not marked as used.
        loop {
            let (r, c) = self.positions[k];
            let len = self.shape.part(r);
            let start = self.cells[k] as usize + 1;
            let next = (start..=len).find(|&v| {
                !self.row_used[r * self.stride + v] && !self.col_used[c * self.stride + v]
            });
            match next {
                Some(v) => {
                    self.mark(k, v as Entry, true);
                    k += 1;
                    if k == n {
                        return true;
                    }
                    self.cells[k] = 0;
                }
                None => {
                    self.cells[k] = 0;
                    if k == self.floor {
                        self.state = State::Done;
                        return false;
                    }
                    k -= 1;
                    let v = self.cells[k];
                    self.mark(k, v, false);
                }
            }
        }
    }

    /// Counts the remaining fillings without materializing them.
    pub fn count_remaining(mut self) -> u64 {
        let mut count = 0;
        while self.advance() {
            count += 1;
        }
        count
    }
}

impl Iterator for Fillings {
    type Item = LatinTableau;

    fn next(&mut self) -> Option<LatinTableau> {
        if self.advance() {
            Some(LatinTableau::from_cells_unchecked(
                self.shape.clone(),
                self.cells.clone(),
            ))
        } else {
            None
        }
    }
}

/// Every Latin tableau of the shape, in lexicographic row-major order.
pub fn enumerate_fillings(shape: &Partition) -> Fillings {
    Fillings::new(shape)
}

pub fn count_fillings(shape: &Partition) -> u64 {
    Fillings::new(shape).count_remaining()
}

/// Whether at least one Latin tableau of the shape exists. Stops at the first.
pub fn is_fillable(shape: &Partition) -> bool {
    Fillings::new(shape).advance()
}

/// The admissible first-row prefixes of length `depth`, in lexicographic
/// order. Enumerating [`Fillings::with_prefix`] for each one in turn yields
/// exactly the stream of [`enumerate_fillings`], which is how the search is
/// split across workers.
pub fn split_prefixes(shape: &Partition, depth: usize) -> Vec<Vec<Entry>> {
    let width = shape.width();
    let depth = depth.min(width);
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(depth);
    let mut used = vec![false; width + 1];
    fn go(
        width: usize,
        depth: usize,
        prefix: &mut Vec<Entry>,
        used: &mut [bool],
        out: &mut Vec<Vec<Entry>>,
    ) {
        if prefix.len() == depth {
            out.push(prefix.clone());
            return;
        }
        for v in 1..=width {
            if !used[v] {
                used[v] = true;
                prefix.push(v as Entry);
                go(width, depth, prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    go(width, depth, &mut prefix, &mut used, &mut out);
    out
}

/// Outcome of checking the wide-partition conjecture on one shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WpcRecord {
    pub shape: Partition,
    pub wide: bool,
    pub fillable: bool,
    /// Present only when a full count was requested.
    pub filling_count: Option<u64>,
    /// `wide == fillable`.
    pub consistent: bool,
}

impl WpcRecord {
    pub fn new(shape: Partition, wide: bool, fillable: bool, filling_count: Option<u64>) -> Self {
        debug_assert!(filling_count.is_none_or(|c| (c > 0) == fillable));
        WpcRecord {
            shape,
            wide,
            fillable,
            filling_count,
            consistent: wide == fillable,
        }
    }
}

/// Compares wideness with fillability. `count` asks for the full number of
/// fillings, which is far more expensive than finding one.
pub fn verify_wpc(shape: &Partition, count: bool) -> WpcRecord {
    let wide = shape.is_wide();
    let (fillable, filling_count) = if count {
        let n = count_fillings(shape);
        (n > 0, Some(n))
    } else {
        (is_fillable(shape), None)
    };
    WpcRecord::new(shape.clone(), wide, fillable, filling_count)
}

/// One record per partition with at most `max_boxes` boxes.
pub fn verify_wpc_range(max_boxes: usize, count: bool) -> Vec<WpcRecord> {
    partitions_up_to(max_boxes)
        .iter()
        .map(|shape| verify_wpc(shape, count))
        .collect()
}
