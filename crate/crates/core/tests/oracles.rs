//! Cross-checks against slow, independent reimplementations.

use std::collections::HashSet;

use isotopy_core::graph::full_graph;
use isotopy_core::invariants::{clique_number, is_cube, stabilizer_order, symmetric_pairs};
use isotopy_core::partition::{partitions_up_to, Partition};
use isotopy_core::{
    count_fillings, enumerate_fillings, ElementaryTransform, IsotopyGraph, LatinTableau,
};

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// Every permutation of `0..lens.len()` that only moves indices among equal
/// lengths.
fn class_permutations(lens: &[usize]) -> Vec<Vec<usize>> {
    let mut all = vec![(0..lens.len()).collect::<Vec<_>>()];
    let mut start = 0;
    while start < lens.len() {
        let end = (start..lens.len())
            .find(|&i| lens[i] != lens[start])
            .unwrap_or(lens.len());
        let block: Vec<usize> = (start..end).collect();
        let mut next = Vec::new();
        for base in &all {
            for perm in permutations(&block) {
                let mut p = base.clone();
                for (k, &i) in block.iter().enumerate() {
                    p[i] = perm[k];
                }
                next.push(p);
            }
        }
        all = next;
        start = end;
    }
    all
}

fn shape(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[test]
fn filling_counts_match_row_permutation_products() {
    for s in partitions_up_to(7) {
        let rows: Vec<Vec<Vec<usize>>> = s
            .parts()
            .iter()
            .map(|&len| permutations(&(1..=len).collect::<Vec<_>>()))
            .collect();
        let mut count = 0u64;
        let mut choice = vec![0; rows.len()];
        'outer: loop {
            let latin = (0..s.width()).all(|j| {
                let col: Vec<usize> = (0..rows.len())
                    .filter(|&i| j < s.part(i))
                    .map(|i| rows[i][choice[i]][j])
                    .collect();
                col.iter().collect::<HashSet<_>>().len() == col.len()
            });
            count += u64::from(latin);
            for i in (0..rows.len()).rev() {
                choice[i] += 1;
                if choice[i] < rows[i].len() {
                    continue 'outer;
                }
                choice[i] = 0;
            }
            break;
        }
        assert_eq!(count_fillings(&s), count, "{s}");
    }
    assert_eq!(count_fillings(&shape(&[4, 4])), 24 * 9);
    assert_eq!(count_fillings(&shape(&[4, 4, 4, 4])), 576);
}

#[test]
fn enumeration_is_strictly_increasing_and_complete() {
    for s in partitions_up_to(10) {
        let all: Vec<LatinTableau> = enumerate_fillings(&s).collect();
        assert!(all.windows(2).all(|w| w[0].cells() < w[1].cells()), "{s}");
        let unique: HashSet<_> = all.iter().collect();
        assert_eq!(unique.len() as u64, count_fillings(&s));
    }
}

#[test]
fn symmetric_pairs_match_a_double_loop() {
    for s in partitions_up_to(8) {
        let cols = s.transpose();
        let n = cols.num_rows();
        for t in enumerate_fillings(&s) {
            let mut expected = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if cols.part(i) != cols.part(j) {
                        continue;
                    }
                    for x in 0..n {
                        for y in x + 1..n {
                            let (c, e) = (
                                ElementaryTransform::col(i, j),
                                ElementaryTransform::ent(x, y),
                            );
                            if e.is_legal_for(&s) && c.apply(&t).unwrap() == e.apply(&t).unwrap() {
                                expected.push((c, e));
                            }
                        }
                    }
                }
            }
            let found: Vec<_> = symmetric_pairs(&t)
                .iter()
                .map(|p| (p.columns, p.entries))
                .collect();
            assert_eq!(found, expected, "{t:?}");
        }
    }
}

#[test]
fn stabilizers_match_group_enumeration() {
    for s in partitions_up_to(8) {
        let group = s.isotopy_group_order().unwrap();
        if group > 20_000 {
            continue;
        }
        let row_perms = class_permutations(s.parts());
        let col_lens = s.transpose();
        let col_perms = class_permutations(col_lens.parts());
        for g in full_graph(&s).unwrap() {
            let t = g.basepoint();
            let mut fixers = 0u128;
            for rho in &row_perms {
                for gamma in &col_perms {
                    for sigma in &col_perms {
                        let fixes = (0..s.num_rows()).all(|i| {
                            (0..s.part(i)).all(|j| {
                                let moved = sigma[t.get(i, j).unwrap() as usize - 1] + 1;
                                t.get(rho[i], gamma[j]) == Some(moved as u16)
                            })
                        });
                        fixers += u128::from(fixes);
                    }
                }
            }
            assert_eq!(stabilizer_order(&g).unwrap(), fixers, "{s} at {t:?}");
        }
    }
}

/// Largest clique up to size 5, by trying every set of at most four
/// neighbours of each vertex.
fn clique_by_subsets(g: &IsotopyGraph) -> usize {
    fn grow(
        g: &IsotopyGraph,
        nbrs: &[usize],
        chosen: &mut Vec<usize>,
        from: usize,
        best: &mut usize,
    ) {
        *best = (*best).max(chosen.len() + 1);
        if chosen.len() == 4 {
            return;
        }
        for k in from..nbrs.len() {
            if chosen.iter().all(|&a| g.are_adjacent(a, nbrs[k])) {
                chosen.push(nbrs[k]);
                grow(g, nbrs, chosen, k + 1, best);
                chosen.pop();
            }
        }
    }
    let mut best = 1;
    for v in 0..g.num_vertices() {
        let nbrs: Vec<usize> = g.neighbors(v).map(|(w, _)| w).collect();
        grow(g, &nbrs, &mut Vec::new(), 0, &mut best);
    }
    best
}

#[test]
fn clique_numbers_match_subset_search() {
    for s in partitions_up_to(7)
        .into_iter()
        .chain([shape(&[4, 4]), shape(&[3, 3, 2])])
    {
        for g in full_graph(&s).unwrap() {
            let expected = clique_by_subsets(&g);
            assert_eq!(clique_number(&g).unwrap(), expected, "{s}");
        }
    }
}

/// Whether `g` is isomorphic to the `d`-cube, by backtracking over vertex
/// maps.
fn isomorphic_to_cube(g: &IsotopyGraph, d: usize) -> bool {
    let n = 1usize << d;
    if g.num_vertices() != n || (0..n).any(|v| g.degree(v) != d) {
        return false;
    }
    fn extend(g: &IsotopyGraph, d: usize, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let x = map.len();
        if x == 1 << d {
            return true;
        }
        for v in 0..1 << d {
            if used[v] {
                continue;
            }
            let consistent =
                (0..x).all(|y| ((x ^ y).count_ones() == 1) == g.are_adjacent(v, map[y]));
            if consistent {
                map.push(v);
                used[v] = true;
                if extend(g, d, map, used) {
                    return true;
                }
                map.pop();
                used[v] = false;
            }
        }
        false
    }
    extend(g, d, &mut Vec::new(), &mut vec![false; n])
}

#[test]
fn cube_recognition_matches_isomorphism_search() {
    let mut seen = [0; 5];
    for s in partitions_up_to(9) {
        for g in full_graph(&s).unwrap() {
            if g.num_vertices() > 16 {
                continue;
            }
            let oracle = (0..=4).find(|&d| isomorphic_to_cube(&g, d));
            assert_eq!(is_cube(&g), oracle, "{s} at {:?}", g.basepoint());
            if let Some(d) = oracle {
                seen[d] += 1;
            }
        }
    }
    assert!(seen.iter().all(|&k| k > 0), "{seen:?}");
}
