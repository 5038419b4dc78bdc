//! Integer partitions and the Young-diagram geometry built on them.
//!
//! A [`Partition`] is a non-increasing tuple of positive integers. It doubles
//! as the shape of a Young diagram: part `i` is the number of boxes in row `i`.
//! Indices are 0-based in the API; rendered text and error messages are 1-based.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("a partition needs at least one part")]
    Empty,
    #[error("part {index} is zero; parts must be positive")]
    ZeroPart { index: usize },
    #[error("part {index} is larger than part {}; parts must be non-increasing", index - 1)]
    Increasing { index: usize },
    #[error("part {index} ({token:?}) is not a positive integer")]
    Parse { index: usize, token: String },
    #[error("dominance compares partitions of the same size, got {left} and {right}")]
    TotalMismatch { left: usize, right: usize },
}

/// A non-increasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.is_empty() {
            return Err(PartitionError::Empty);
        }
        for (i, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(PartitionError::ZeroPart { index: i + 1 });
            }
            if i > 0 && p > parts[i - 1] {
                return Err(PartitionError::Increasing { index: i + 1 });
            }
        }
        Ok(Partition { parts })
    }

    /// The staircase `(n, n-1, ..., 1)`.
    pub fn staircase(n: usize) -> Self {
        assert!(n > 0, "staircase needs n >= 1");
        Partition {
            parts: (1..=n).rev().collect(),
        }
    }

    /// `rows` rows of `cols` boxes each.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "rectangle needs positive sides");
        Partition {
            parts: vec![cols; rows],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Length of row `i`, or 0 past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of boxes.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of the first (longest) row.
    pub fn width(&self) -> usize {
        self.parts[0]
    }

    /// The conjugate partition: column lengths of the diagram.
    pub fn transpose(&self) -> Partition {
        let parts = (0..self.width())
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Run-length encoding as `(length, multiplicity)` pairs, longest first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match runs.last_mut() {
                Some((len, count)) if *len == p => *count += 1,
                _ => runs.push((p, 1)),
            }
        }
        runs
    }

    /// Dominance order: every prefix sum of `self` is at least the matching
    /// prefix sum of `other`, padding the shorter one with zeros.
    pub fn dominates(&self, other: &Partition) -> Result<bool, PartitionError> {
        let (left, right) = (self.total(), other.total());
        if left != right {
            return Err(PartitionError::TotalMismatch { left, right });
        }
        let rows = self.num_rows().max(other.num_rows());
        let (mut a, mut b) = (0, 0);
        for i in 0..rows {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All distinct non-empty partitions obtained by deleting some parts,
    /// including `self`.
    ///
    /// Deleting parts of equal length gives equal values, so a subpartition is
    /// determined by how many parts of each distinct length it keeps.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let runs = self.multiplicities();
        let mut keep: Vec<usize> = runs.iter().map(|&(_, k)| k).collect();
        let mut out = Vec::new();
        loop {
            let parts: Vec<usize> = runs
                .iter()
                .zip(&keep)
                .flat_map(|(&(len, _), &k)| core::iter::repeat_n(len, k))
                .collect();
            if !parts.is_empty() {
                out.push(Partition { parts });
            }
            // Mixed-radix decrement of `keep`, last run varying fastest.
            let mut i = keep.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if keep[i] > 0 {
                    keep[i] -= 1;
                    for (j, k) in keep.iter_mut().enumerate().skip(i + 1) {
                        *k = runs[j].1;
                    }
                    break;
                }
            }
        }
    }

    /// Every subpartition dominates its own transpose.
    pub fn is_wide(&self) -> bool {
        self.subpartitions().iter().all(|mu| {
            mu.dominates(&mu.transpose())
                .expect("transpose preserves the number of boxes")
        })
    }

    /// No three rows and no three columns share a length.
    pub fn is_squareable(&self) -> bool {
        let few = |p: &Partition| p.multiplicities().iter().all(|&(_, k)| k < 3);
        few(self) && few(&self.transpose())
    }

    /// `(a, b)`: the number of pairs of equal-length rows and of equal-length
    /// columns.
    pub fn same_length_pairs(&self) -> (usize, usize) {
        let pairs = |p: &Partition| {
            p.multiplicities()
                .iter()
                .map(|&(_, k)| k * (k - 1) / 2)
                .sum()
        };
        (pairs(self), pairs(&self.transpose()))
    }

    /// Order of the isotopy group `S_row × S_col × S_ent`.
    ///
    /// Rows contribute one factorial per length class; columns and entries
    /// both follow the column-length classes, so that factor is squared.
    /// `None` on `u128` overflow.
    pub fn isotopy_group_order(&self) -> Option<u128> {
        let class_product = |p: &Partition| -> Option<u128> {
            p.multiplicities()
                .iter()
                .try_fold(1u128, |acc, &(_, k)| acc.checked_mul(factorial(k)?))
        };
        let rows = class_product(self)?;
        let cols = class_product(&self.transpose())?;
        rows.checked_mul(cols)?.checked_mul(cols)
    }
}

fn factorial(k: usize) -> Option<u128> {
    (2..=k as u128).try_fold(1u128, |acc, i| acc.checked_mul(i))
}

/// Comma-separated parts, e.g. `4,3,3`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Err(PartitionError::Empty);
        }
        let parts = s
            .split(',')
            .enumerate()
            .map(|(i, tok)| {
                let tok = tok.trim();
                tok.parse::<usize>().map_err(|_| PartitionError::Parse {
                    index: i + 1,
                    token: tok.into(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order: `(n)` first, `(1,…,1)` last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// All partitions with between 1 and `max_boxes` boxes, grouped by size.
pub fn partitions_up_to(max_boxes: usize) -> Vec<Partition> {
    (1..=max_boxes).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[1]).transpose(), p(&[1]));
        assert_eq!(p(&[4, 3, 3]).transpose(), p(&[3, 3, 3, 1]));
        assert_eq!(p(&[3, 2]).transpose(), p(&[2, 2, 1]));
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[2, 2]).dominates(&p(&[2, 2])).unwrap());
        assert!(p(&[2]).dominates(&p(&[1, 1])).unwrap());
        assert!(!p(&[1, 1]).dominates(&p(&[2])).unwrap());
        assert_eq!(
            p(&[2]).dominates(&p(&[1])),
            Err(PartitionError::TotalMismatch { left: 2, right: 1 })
        );
    }

    #[test]
    fn subpartition_examples() {
        assert_eq!(p(&[1]).subpartitions(), vec![p(&[1])]);
        let mut got = p(&[2, 1]).subpartitions();
        got.sort_by(|a, b| a.parts.cmp(&b.parts));
        assert_eq!(got, vec![p(&[1]), p(&[2]), p(&[2, 1])]);
        assert_eq!(p(&[3, 3]).subpartitions(), vec![p(&[3, 3]), p(&[3])]);
    }

    #[test]
    fn wideness_examples() {
        assert!(p(&[4, 3, 3]).is_wide());
        assert!(p(&[7, 7, 7, 5, 3, 3, 2]).is_wide());
        assert!(!p(&[2, 1, 1]).is_wide());
    }

    #[test]
    fn squareable_examples() {
        assert!(p(&[3, 2]).is_squareable());
        assert!(!p(&[3, 3, 3]).is_squareable());
        assert!(p(&[4, 4, 2, 2]).is_squareable());
        // Three columns of length 1.
        assert!(!p(&[3]).is_squareable());
    }

    #[test]
    fn same_length_pair_examples() {
        assert_eq!(p(&[4, 4]).same_length_pairs(), (1, 6));
        assert_eq!(Partition::staircase(5).same_length_pairs(), (0, 0));
        assert_eq!(p(&[3, 2]).same_length_pairs(), (0, 1));
    }

    #[test]
    fn group_order() {
        // (3,2): one pair of equal columns, so 1 * 2 * 2.
        assert_eq!(p(&[3, 2]).isotopy_group_order(), Some(4));
        // 3x3 square: 3!^3.
        assert_eq!(p(&[3, 3, 3]).isotopy_group_order(), Some(216));
        // (64): 64!^2 does not fit.
        assert_eq!(p(&[64]).isotopy_group_order(), None);
    }

    #[test]
    fn parse_reports_offending_index() {
        assert_eq!("4,3,3".parse::<Partition>().unwrap(), p(&[4, 3, 3]));
        assert_eq!(
            "3,4".parse::<Partition>(),
            Err(PartitionError::Increasing { index: 2 })
        );
        assert_eq!(
            "3,0".parse::<Partition>(),
            Err(PartitionError::ZeroPart { index: 2 })
        );
        assert!(matches!(
            "3,x,1".parse::<Partition>(),
            Err(PartitionError::Parse { index: 2, .. })
        ));
        assert_eq!("".parse::<Partition>(), Err(PartitionError::Empty));
        assert_eq!(p(&[4, 3, 3]).to_string(), "4,3,3");
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=12).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }
}
