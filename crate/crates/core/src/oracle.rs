//! Class membership tests and the exhaustive-subset oracle used as ground
//! truth by every differential test in this crate.

use std::fmt;
use std::sync::Arc;

use crate::graph::{Graph, VertexSet};

/// A named, deterministic membership predicate for a graph class.
#[derive(Clone)]
pub struct ClassRecognizer {
    name: String,
    predicate: Arc<dyn Fn(&Graph) -> bool + Send + Sync>,
}

impl ClassRecognizer {
    pub fn new<F>(name: impl Into<String>, predicate: F) -> Self
    where
        F: Fn(&Graph) -> bool + Send + Sync + 'static,
    {
        ClassRecognizer { name: name.into(), predicate: Arc::new(predicate) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        (self.predicate)(g)
    }
}

impl fmt::Debug for ClassRecognizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClassRecognizer({})", self.name)
    }
}

/// All subsets of `0..n` in canonical order: by size, then lexicographically
/// by sorted member list.
pub fn canonical_subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0..=n).flat_map(move |k| {
        index_combinations(n, k).map(move |idx| VertexSet::from_iter(n, idx).unwrap())
    })
}

/// All `k`-element index combinations from `0..n`, lexicographic.
pub(crate) fn index_combinations(n: usize, k: usize) -> Combinations {
    Combinations { n, k, idx: (0..k).collect(), done: k > n }
}

pub(crate) struct Combinations {
    n: usize,
    k: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        // advance the rightmost index that still has room
        let mut i = self.k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - (self.k - i) {
                self.idx[i] += 1;
                for j in i + 1..self.k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Exhaustively searches all `2^n` subsets for the canonical-least `S` with
/// `rec(G ⊕ S)`. Reference implementation of the problem; exponential.
pub fn oracle_solve(g: &Graph, rec: &ClassRecognizer) -> Option<VertexSet> {
    canonical_subsets(g.vertex_count())
        .find(|s| rec.accepts(&g.partial_complement(s).unwrap()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn regular(r: usize) -> ClassRecognizer {
        ClassRecognizer::new(format!("{r}-regular"), move |g: &Graph| {
            g.vertices().all(|v| g.degree(v) == r)
        })
    }

    fn bipartite() -> ClassRecognizer {
        ClassRecognizer::new("bipartite", crate::recognizers::is_bipartite)
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let order: Vec<Vec<usize>> = canonical_subsets(3).map(|s| s.to_vec()).collect();
        assert_eq!(
            order,
            vec![
                vec![],
                vec![0],
                vec![1],
                vec![2],
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 1, 2],
            ]
        );
    }

    #[test]
    fn subset_count_is_two_to_the_n() {
        for n in 0..=6 {
            assert_eq!(canonical_subsets(n).count(), 1 << n);
        }
    }

    #[test]
    fn already_in_class_yields_empty_set() {
        let s = oracle_solve(&Graph::cycle(7), &regular(2)).unwrap();
        assert!(s.is_empty());
    }

    #[test]
    fn c5_to_bipartite_flips_an_adjacent_pair() {
        // All 32 subsets enumerated; the canonical-least witness is {0, 1},
        // which removes one edge of C5 and leaves P5.
        let s = oracle_solve(&Graph::cycle(5), &bipartite()).unwrap();
        assert_eq!(s.to_vec(), vec![0, 1]);
    }

    #[test]
    fn k5_never_becomes_3_regular() {
        // Any vertex outside S keeps degree 4; S = V gives degree 0.
        assert!(oracle_solve(&Graph::complete(5), &regular(3)).is_none());
    }

    #[test]
    fn witness_always_verifies() {
        for n in 0..=5 {
            let g = Graph::cycle(n);
            if let Some(s) = oracle_solve(&g, &bipartite()) {
                assert!(bipartite().accepts(&g.partial_complement(&s).unwrap()));
            }
        }
    }
}
