//! Named tableau families: the cube family `T_d`, the symmetric family with
//! nontrivial stabilizers, staircases, cyclic squares, and a catalog of
//! tableaux whose isotopy graphs contain triangles.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::invariants::AnalysisReport;
use crate::partition::Partition;
use crate::tableau::{ElementaryTransform, Entry, LatinTableau};

fn tableau(rows: Vec<Vec<Entry>>) -> LatinTableau {
    LatinTableau::from_rows(&rows).expect("constructed rows form a Latin tableau")
}

/// Odd numbers from `2k - 1` down to 1, then even numbers from 2 up to `2k`.
fn zigzag(k: usize) -> impl Iterator<Item = Entry> {
    let odd = (1..=k).rev().map(|i| (2 * i - 1) as Entry);
    let even = (1..=k).map(|i| (2 * i) as Entry);
    odd.chain(even)
}

/// A tableau whose isotopy graph is the `d`-dimensional cube.
pub fn build_td(d: usize) -> LatinTableau {
    let compact: &[&str] = match d {
        0 => &["1"],
        1 => &["12"],
        2 => &["312", "12"],
        3 => &["2431", "4312", "312", "12"],
        _ => &[],
    };
    if !compact.is_empty() {
        return LatinTableau::from_compact(compact).expect("valid base tableau");
    }
    if d % 2 == 0 {
        // Row k from the bottom has length 2k.
        tableau((1..=d / 2).rev().map(|k| zigzag(k).collect()).collect())
    } else {
        let mut first = vec![(d - 1) as Entry];
        first.extend((1..=(d - 1) / 2).rev().map(|i| (2 * i - 1) as Entry));
        first.extend((1..=(d - 3) / 2).map(|i| (2 * i) as Entry));
        let mut rows = vec![first];
        rows.extend(build_td(d - 1).rows().map(<[Entry]>::to_vec));
        tableau(rows)
    }
}

/// The filling of `(2k, 2k, 2k-2, 2k-2, ..., 2, 2)` in which every pair of
/// equal rows reads `2L, 2L-1, ..., 1` over its adjacent-pair swap, so that
/// each 2x2 block is `x y / y x`. For `k = 1` this is `12 / 21`.
pub fn build_symmetric_family(k: usize) -> LatinTableau {
    assert!(k >= 1, "the symmetric family starts at k = 1");
    if k == 1 {
        return LatinTableau::from_compact(&["12", "21"]).expect("valid");
    }
    let mut rows = Vec::with_capacity(2 * k);
    for l in (1..=k).rev() {
        let top: Vec<Entry> = (1..=2 * l as Entry).rev().collect();
        let bottom = top.chunks(2).flat_map(|p| [p[1], p[0]]).collect();
        rows.push(top);
        rows.push(bottom);
    }
    tableau(rows)
}

/// The unique filling of the staircase `(n, n-1, ..., 1)`.
pub fn staircase_tableau(n: usize) -> LatinTableau {
    assert!(n >= 1);
    tableau(
        (0..n)
            .map(|i| (1..=(n - i) as Entry).rev().collect())
            .collect(),
    )
}

/// The cyclic Latin square of order `n`.
pub fn cyclic_square(n: usize) -> LatinTableau {
    assert!(n >= 1);
    tableau(
        (0..n)
            .map(|i| (0..n).map(|j| ((i + j) % n + 1) as Entry).collect())
            .collect(),
    )
}

/// Invariants a catalog entry is claimed to have. Absent fields are not
/// checked.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ExpectedReport {
    pub has_triangle: Option<bool>,
    pub clique_number: Option<usize>,
}

impl ExpectedReport {
    /// Names of the fields that disagree with `report`.
    pub fn mismatches(&self, report: &AnalysisReport) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.has_triangle.is_some_and(|v| v != report.has_triangle) {
            out.push("has_triangle");
        }
        if self
            .clique_number
            .is_some_and(|v| v != report.clique_number)
        {
            out.push("clique_number");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    /// The rows as listed, with `...` marking where a row may be extended.
    pub raw: &'static str,
    /// The minimal instance: `raw` with every `...` dropped.
    pub tableau: LatinTableau,
    /// The row swap and column swap through the four marked boxes. Their
    /// composite equals an entry swap on the tableau.
    pub highlight: (ElementaryTransform, ElementaryTransform),
    pub expected: ExpectedReport,
}

/// `(raw rows, rows, marked row pair, marked column pair)`, pairs 1-based.
type RawEntry = (
    &'static str,
    &'static [&'static str],
    (usize, usize),
    (usize, usize),
);

const CATALOG: &[RawEntry] = &[
    (
        "3412...,4321,12,21",
        &["3412", "4321", "12", "21"],
        (3, 4),
        (3, 4),
    ),
    (
        "534...12...,34......21,12,21",
        &["534612", "346521", "12", "21"],
        (3, 4),
        (5, 6),
    ),
    ("231,312,12", &["231", "312", "12"], (1, 2), (1, 2)),
    (
        "3412,4321,123,21",
        &["3412", "4321", "123", "21"],
        (1, 2),
        (1, 2),
    ),
    ("213,321", &["213", "321"], (1, 2), (2, 3)),
    ("213,321,1", &["213", "321", "1"], (1, 2), (2, 3)),
    ("2143,3412,123", &["2143", "3412", "123"], (1, 2), (2, 3)),
    ("3412,4321", &["3412", "4321"], (1, 2), (3, 4)),
    ("3412,4321,1", &["3412", "4321", "1"], (1, 2), (3, 4)),
    ("3412,4321,12", &["3412", "4321", "12"], (1, 2), (3, 4)),
    (
        "3412,4321,21,1",
        &["3412", "4321", "21", "1"],
        (1, 2),
        (3, 4),
    ),
    ("3412...,12,21", &["3412", "12", "21"], (2, 3), (1, 2)),
    ("132...,213,321", &["132", "213", "321"], (2, 3), (2, 3)),
    (
        "4321...,213,321,1",
        &["4321", "213", "321", "1"],
        (2, 3),
        (2, 3),
    ),
    (
        "4213...,2341,1432,312",
        &["4213", "2341", "1432", "312"],
        (2, 3),
        (2, 3),
    ),
    (
        "1234...,3412,4321",
        &["1234", "3412", "4321"],
        (2, 3),
        (3, 4),
    ),
    (
        "1234...,3412,4321,21",
        &["1234", "3412", "4321", "21"],
        (2, 3),
        (3, 4),
    ),
    (
        "52341...,3412,4321,21,1",
        &["52341", "3412", "4321", "21", "1"],
        (2, 3),
        (3, 4),
    ),
    (
        "563412...,3412,4321,21,12",
        &["563412", "3412", "4321", "21", "12"],
        (2, 3),
        (3, 4),
    ),
    (
        "34521...,4321...,12,21",
        &["34521", "4321", "12", "21"],
        (3, 4),
        (1, 2),
    ),
    (
        "1234,2143,3412,4321",
        &["1234", "2143", "3412", "4321"],
        (3, 4),
        (3, 4),
    ),
    (
        "52341...,2143...,3412,4321",
        &["52341", "2143", "3412", "4321"],
        (3, 4),
        (3, 4),
    ),
    (
        "52341...,2143...,3412,4321,1",
        &["52341", "2143", "3412", "4321", "1"],
        (3, 4),
        (3, 4),
    ),
    (
        "25341,51432,3412,4321,12",
        &["25341", "51432", "3412", "4321", "12"],
        (3, 4),
        (3, 4),
    ),
    (
        "563412...,2143...,3412,4321,12",
        &["563412", "2143", "3412", "4321", "12"],
        (3, 4),
        (3, 4),
    ),
    (
        "653421...,52431...,3412,4321,21,1",
        &["653421", "52431", "3412", "4321", "21", "1"],
        (3, 4),
        (3, 4),
    ),
    (
        "653421,564312,3412,4321,21,12",
        &["653421", "564312", "3412", "4321", "21", "12"],
        (3, 4),
        (3, 4),
    ),
    (
        "6534721...,564321...,3412,4321,21,12",
        &["6534721", "564321", "3412", "4321", "21", "12"],
        (3, 4),
        (3, 4),
    ),
];

/// One filling for each shape whose isotopy graph contains a triangle,
/// instantiated at its smallest extension.
pub fn appendix_catalog() -> Vec<CatalogEntry> {
    CATALOG
        .iter()
        .map(|&(raw, rows, (r1, r2), (c1, c2))| {
            let tableau = LatinTableau::from_compact(rows).expect("catalog rows are Latin");
            let shape = tableau.shape();
            let kind = if is_square(shape) {
                " square"
            } else if tableau.get(r1 - 1, c1 - 1).is_none() {
                " split"
            } else {
                "-block"
            };
            CatalogEntry {
                name: format!("({}){kind}", shape),
                raw,
                highlight: (
                    ElementaryTransform::row(r1 - 1, r2 - 1),
                    ElementaryTransform::col(c1 - 1, c2 - 1),
                ),
                expected: ExpectedReport {
                    has_triangle: Some(true),
                    clique_number: Some(4),
                },
                tableau,
            }
        })
        .collect()
}

fn is_square(shape: &Partition) -> bool {
    shape.parts().iter().all(|&p| p == shape.num_rows())
}
