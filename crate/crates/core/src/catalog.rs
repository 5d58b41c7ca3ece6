//! Catalog of all non-isomorphic graphs on up to 7 vertices, used as the
//! instance pool for the differential suites.
//!
//! Graphs are built level by level: each canonical n-vertex graph is
//! extended by one new vertex with every possible neighborhood, and the
//! results are deduplicated by canonical form (the minimum edge bitmask
//! over all vertex permutations). 7 vertices means 5040 permutations over
//! 21 candidate edges, which stays comfortably cheap; the catalog is built
//! once per process and cached.

use std::collections::HashSet;
use std::sync::OnceLock;

use crate::graph::{Graph, GraphBuilder};

/// Largest vertex count the catalog covers.
pub const MAX_CATALOG_N: usize = 7;

/// Known counts of non-isomorphic simple graphs for n = 0..=7.
pub const GRAPH_COUNTS: [usize; 8] = [1, 1, 2, 4, 11, 34, 156, 1044];

/// All non-isomorphic graphs on exactly `n` vertices, one canonical
/// representative per isomorphism class. Panics if `n > MAX_CATALOG_N`.
pub fn nonisomorphic_graphs(n: usize) -> &'static [Graph] {
    assert!(n <= MAX_CATALOG_N, "catalog covers at most {MAX_CATALOG_N} vertices");
    static CACHE: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    &CACHE.get_or_init(build_catalog)[n]
}

/// All non-isomorphic graphs with at most `n` vertices.
pub fn nonisomorphic_graphs_up_to(n: usize) -> Vec<&'static Graph> {
    (0..=n).flat_map(|k| nonisomorphic_graphs(k).iter()).collect()
}

// Column-major so that the pair indices of an (n-1)-vertex graph are a
// prefix of the n-vertex indices, letting level masks embed directly.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for v in 1..n {
        for u in 0..v {
            out.push((u, v));
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for sub in permutations(n - 1) {
        for pos in 0..n {
            let mut p = sub.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out
}

fn canonical_mask(mask: u32, perms: &[Vec<usize>], pair_list: &[(usize, usize)], pair_idx: &[[usize; 8]; 8]) -> u32 {
    let mut best = u32::MAX;
    for perm in perms {
        let mut m = 0u32;
        let mut bits = mask;
        while bits != 0 {
            let p = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (u, v) = pair_list[p];
            let (a, b) = (perm[u], perm[v]);
            m |= 1 << pair_idx[a.min(b)][a.max(b)];
        }
        best = best.min(m);
    }
    best
}

fn build_catalog() -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<u32>> = vec![vec![0]]; // n = 0: the empty graph
    for n in 1..=MAX_CATALOG_N {
        let pair_list = pairs(n);
        let mut pair_idx = [[0usize; 8]; 8];
        for (p, &(u, v)) in pair_list.iter().enumerate() {
            pair_idx[u][v] = p;
        }
        let perms = permutations(n);
        let mut seen: HashSet<u32> = HashSet::new();
        for &base in &levels[n - 1] {
            // the first C(n-1, 2) pair indices coincide between levels
            for nb in 0u32..1 << (n - 1) {
                let mut mask = base;
                for v in 0..n - 1 {
                    if nb >> v & 1 == 1 {
                        mask |= 1 << pair_idx[v][n - 1];
                    }
                }
                seen.insert(canonical_mask(mask, &perms, &pair_list, &pair_idx));
            }
        }
        let mut level: Vec<u32> = seen.into_iter().collect();
        level.sort_unstable();
        levels.push(level);
    }
    levels
        .into_iter()
        .enumerate()
        .map(|(n, masks)| {
            let pair_list = pairs(n);
            masks
                .into_iter()
                .map(|mask| {
                    let mut b = GraphBuilder::new(n);
                    for (p, &(u, v)) in pair_list.iter().enumerate() {
                        if mask >> p & 1 == 1 {
                            b.add_edge(u, v);
                        }
                    }
                    b.build()
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_the_literature() {
        for (n, &expected) in GRAPH_COUNTS.iter().enumerate() {
            assert_eq!(nonisomorphic_graphs(n).len(), expected, "n = {n}");
        }
    }

    #[test]
    fn degree_sequences_are_distinct_where_counts_say_so() {
        // n = 2: the two graphs are K2 and its complement
        let level = nonisomorphic_graphs(2);
        let mut edge_counts: Vec<usize> = level.iter().map(|g| g.edge_count()).collect();
        edge_counts.sort_unstable();
        assert_eq!(edge_counts, vec![0, 1]);
    }

    #[test]
    fn no_two_representatives_are_isomorphic_at_n4() {
        // cross-check the dedup with a brute-force isomorphism test
        let level = nonisomorphic_graphs(4);
        let perms = permutations(4);
        for (i, g) in level.iter().enumerate() {
            for h in &level[i + 1..] {
                let iso = perms.iter().any(|p| {
                    g.edges().iter().all(|&(u, v)| h.has_edge(p[u], p[v]))
                        && g.edge_count() == h.edge_count()
                });
                assert!(!iso, "{g:?} and {h:?} are isomorphic");
            }
        }
    }

    #[test]
    fn up_to_collects_all_levels() {
        assert_eq!(nonisomorphic_graphs_up_to(4).len(), 1 + 1 + 2 + 4 + 11);
    }
}
