//! Latin tableaux and the elementary transformations acting on them.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::partition::{Partition, PartitionError};

/// A single box entry. Entries of a tableau of shape `λ` lie in `1..=λ_1`.
pub type Entry = u16;

/// Validation and transformation failures. Row, column and value numbers are
/// 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("invalid shape: {0}")]
    Shape(#[from] PartitionError),
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("row {row} has the wrong length for the shape")]
    ShapeMismatch { row: usize },
    #[error("row {row} is not a permutation of 1..=its length")]
    RowNotPermutation { row: usize },
    #[error("column {column} repeats entry {value} in rows {} and {}", rows.0, rows.1)]
    ColumnRepeat {
        column: usize,
        value: Entry,
        rows: (usize, usize),
    },
    #[error("compact row {row} contains a non-digit")]
    NotADigit { row: usize },
    #[error("{transform} is not defined for shape {shape}")]
    IllegalTransform {
        transform: ElementaryTransform,
        shape: Partition,
    },
}

/// A filling of a Young diagram in which row `i` is a permutation of
/// `1..=λ_i` and no column repeats an entry.
///
/// Equality and hashing are exact filling equality, so tableaux can key maps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatinTableau {
    shape: Partition,
    cells: Vec<Entry>,
}

impl LatinTableau {
    /// Checks `rows` against `shape` and the Latin conditions.
    pub fn new<R: AsRef<[Entry]>>(shape: Partition, rows: &[R]) -> Result<Self, TableauError> {
        if rows.len() != shape.num_rows() {
            return Err(TableauError::RowCount {
                expected: shape.num_rows(),
                found: rows.len(),
            });
        }
        let mut cells = Vec::with_capacity(shape.total());
        let mut seen = vec![false; shape.width() + 1];
        for (i, (row, &len)) in rows.iter().zip(shape.parts()).enumerate() {
            let row = row.as_ref();
            if row.len() != len {
                return Err(TableauError::ShapeMismatch { row: i + 1 });
            }
            seen[..=len].fill(false);
            for &v in row {
                let v = v as usize;
                if v == 0 || v > len || seen[v] {
                    return Err(TableauError::RowNotPermutation { row: i + 1 });
                }
                seen[v] = true;
            }
            cells.extend_from_slice(row);
        }
        let tableau = LatinTableau { shape, cells };
        tableau.check_columns()?;
        Ok(tableau)
    }

    /// Like [`LatinTableau::new`], taking the shape from the row lengths.
    pub fn from_rows<R: AsRef<[Entry]>>(rows: &[R]) -> Result<Self, TableauError> {
        let shape = Partition::new(rows.iter().map(|r| r.as_ref().len()).collect())?;
        Self::new(shape, rows)
    }

    /// Rows written as digit strings, e.g. `["312", "12"]`. Only usable when
    /// every entry is below 10.
    pub fn from_compact(rows: &[&str]) -> Result<Self, TableauError> {
        let rows = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                r.chars()
                    .map(|c| c.to_digit(10).map(|d| d as Entry))
                    .collect::<Option<Vec<Entry>>>()
                    .ok_or(TableauError::NotADigit { row: i + 1 })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(&rows)
    }

    pub(crate) fn from_cells_unchecked(shape: Partition, cells: Vec<Entry>) -> Self {
        debug_assert_eq!(shape.total(), cells.len());
        LatinTableau { shape, cells }
    }

    fn check_columns(&self) -> Result<(), TableauError> {
        let layout = Layout::new(&self.shape);
        let mut first_row = vec![usize::MAX; self.shape.width() + 1];
        for (j, &len) in layout.col_lens.iter().enumerate() {
            first_row.fill(usize::MAX);
            for i in 0..len {
                let v = self.cells[layout.row_starts[i] + j];
                let prev = first_row[v as usize];
                if prev != usize::MAX {
                    return Err(TableauError::ColumnRepeat {
                        column: j + 1,
                        value: v,
                        rows: (prev + 1, i + 1),
                    });
                }
                first_row[v as usize] = i;
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Entries in row-major order.
    pub fn cells(&self) -> &[Entry] {
        &self.cells
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Entry]> + '_ {
        let mut start = 0;
        self.shape.parts().iter().map(move |&len| {
            let row = &self.cells[start..start + len];
            start += len;
            row
        })
    }

    pub fn row(&self, i: usize) -> &[Entry] {
        let start: usize = self.shape.parts()[..i].iter().sum();
        &self.cells[start..start + self.shape.parts()[i]]
    }

    /// The entry in row `i`, column `j`, if that box exists.
    pub fn get(&self, i: usize, j: usize) -> Option<Entry> {
        if i < self.shape.num_rows() && j < self.shape.part(i) {
            Some(self.row(i)[j])
        } else {
            None
        }
    }

    /// Multiplicities of the entries `1, 2, …`. Always the transpose of the shape.
    pub fn content(&self) -> Partition {
        let mut counts = vec![0usize; self.shape.width()];
        for &v in &self.cells {
            counts[v as usize - 1] += 1;
        }
        Partition::new(counts).expect("a Latin tableau has content equal to its transposed shape")
    }
}

/// Box offsets of a shape, shared by the hot paths that act on raw cells.
#[derive(Debug, Clone)]
pub(crate) struct Layout {
    pub(crate) row_starts: Vec<usize>,
    pub(crate) row_lens: Vec<usize>,
    pub(crate) col_lens: Vec<usize>,
}

impl Layout {
    pub(crate) fn new(shape: &Partition) -> Self {
        let mut row_starts = Vec::with_capacity(shape.num_rows());
        let mut start = 0;
        for &len in shape.parts() {
            row_starts.push(start);
            start += len;
        }
        Layout {
            row_starts,
            row_lens: shape.parts().to_vec(),
            col_lens: shape.transpose().parts().to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TransformKind {
    /// Swap two rows of equal length.
    Row,
    /// Swap two columns of equal length.
    Col,
    /// Exchange two entries that occur equally often.
    Ent,
}

impl TransformKind {
    fn letter(self) -> char {
        match self {
            TransformKind::Row => 'r',
            TransformKind::Col => 'c',
            TransformKind::Ent => 's',
        }
    }
}

/// One transposition of rows, columns or entries.
///
/// The pair is stored 0-based and normalized so that `first < second`; for
/// [`TransformKind::Ent`] index `k` stands for the entry value `k + 1`.
/// `Display` and `FromStr` use the 1-based `r(1,2)` / `c(1,2)` / `s(1,2)` form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementaryTransform {
    kind: TransformKind,
    first: u16,
    second: u16,
}

impl ElementaryTransform {
    /// Panics if `a == b` or either index exceeds `u16::MAX`.
    pub fn new(kind: TransformKind, a: usize, b: usize) -> Self {
        assert_ne!(a, b, "a transposition needs two distinct indices");
        let (first, second) = (a.min(b), a.max(b));
        ElementaryTransform {
            kind,
            first: u16::try_from(first).expect("index fits in u16"),
            second: u16::try_from(second).expect("index fits in u16"),
        }
    }

    pub fn row(a: usize, b: usize) -> Self {
        Self::new(TransformKind::Row, a, b)
    }

    pub fn col(a: usize, b: usize) -> Self {
        Self::new(TransformKind::Col, a, b)
    }

    /// Exchange of the entry values `a + 1` and `b + 1`.
    pub fn ent(a: usize, b: usize) -> Self {
        Self::new(TransformKind::Ent, a, b)
    }

    pub fn kind(&self) -> TransformKind {
        self.kind
    }

    /// The 0-based pair, smaller index first.
    pub fn pair(&self) -> (usize, usize) {
        (self.first as usize, self.second as usize)
    }

    /// For entry swaps, the two entry values exchanged.
    pub fn entries(&self) -> (Entry, Entry) {
        (self.first + 1, self.second + 1)
    }

    /// Whether the transposition is defined on tableaux of this shape.
    ///
    /// Entry legality reads the transposed shape, which equals the content of
    /// every Latin tableau of the shape.
    pub fn is_legal_for(&self, shape: &Partition) -> bool {
        let (a, b) = self.pair();
        match self.kind {
            TransformKind::Row => b < shape.num_rows() && shape.part(a) == shape.part(b),
            TransformKind::Col | TransformKind::Ent => {
                b < shape.width() && {
                    let cols = shape.transpose();
                    cols.part(a) == cols.part(b)
                }
            }
        }
    }

    pub fn apply(&self, tableau: &LatinTableau) -> Result<LatinTableau, TableauError> {
        if !self.is_legal_for(&tableau.shape) {
            return Err(TableauError::IllegalTransform {
                transform: *self,
                shape: tableau.shape.clone(),
            });
        }
        let mut cells = tableau.cells.clone();
        self.act(&Layout::new(&tableau.shape), &mut cells);
        Ok(LatinTableau::from_cells_unchecked(
            tableau.shape.clone(),
            cells,
        ))
    }

    /// Applies the transposition in place. Assumes legality.
    pub(crate) fn act(&self, layout: &Layout, cells: &mut [Entry]) {
        let (a, b) = self.pair();
        match self.kind {
            TransformKind::Row => {
                let (sa, sb, len) = (
                    layout.row_starts[a],
                    layout.row_starts[b],
                    layout.row_lens[a],
                );
                let (head, tail) = cells.split_at_mut(sb);
                head[sa..sa + len].swap_with_slice(&mut tail[..len]);
            }
            TransformKind::Col => {
                for &start in &layout.row_starts[..layout.col_lens[a]] {
                    cells.swap(start + a, start + b);
                }
            }
            TransformKind::Ent => {
                let (x, y) = self.entries();
                for v in cells.iter_mut() {
                    if *v == x {
                        *v = y;
                    } else if *v == y {
                        *v = x;
                    }
                }
            }
        }
    }
}

impl fmt::Display for ElementaryTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({},{})",
            self.kind.letter(),
            self.first + 1,
            self.second + 1
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error(
    "cannot parse transform {text:?}: expected r(i,j), c(i,j) or s(i,j) with distinct 1-based i, j"
)]
pub struct TransformParseError {
    pub text: String,
}

impl FromStr for ElementaryTransform {
    type Err = TransformParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || TransformParseError { text: s.into() };
        let s = s.trim();
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('r') => TransformKind::Row,
            Some('c') => TransformKind::Col,
            Some('s') => TransformKind::Ent,
            _ => return Err(err()),
        };
        let inner = chars
            .as_str()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(err)?;
        let (a, b) = inner.split_once(',').ok_or_else(err)?;
        let a: usize = a.trim().parse().map_err(|_| err())?;
        let b: usize = b.trim().parse().map_err(|_| err())?;
        if a == 0 || b == 0 || a == b || a > u16::MAX as usize || b > u16::MAX as usize {
            return Err(err());
        }
        Ok(ElementaryTransform::new(kind, a - 1, b - 1))
    }
}

/// Every legal transposition for the shape: rows, then columns, then entries,
/// each kind in lexicographic pair order. There are `a + 2b` of them.
pub fn generators(shape: &Partition) -> Vec<ElementaryTransform> {
    let cols = shape.transpose();
    let pairs = |lens: &[usize]| {
        let mut out = Vec::new();
        for a in 0..lens.len() {
            for b in a + 1..lens.len() {
                if lens[a] == lens[b] {
                    out.push((a, b));
                }
            }
        }
        out
    };
    let row_pairs = pairs(shape.parts());
    let col_pairs = pairs(cols.parts());
    let mut out = Vec::with_capacity(row_pairs.len() + 2 * col_pairs.len());
    out.extend(
        row_pairs
            .iter()
            .map(|&(a, b)| ElementaryTransform::row(a, b)),
    );
    out.extend(
        col_pairs
            .iter()
            .map(|&(a, b)| ElementaryTransform::col(a, b)),
    );
    out.extend(
        col_pairs
            .iter()
            .map(|&(a, b)| ElementaryTransform::ent(a, b)),
    );
    out
}
