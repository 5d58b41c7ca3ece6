//! Structured solver for partial complementation into a triangle-free class.
//!
//! Case analysis: (i) a solution of size at most two, found by brute force;
//! (ii) a solution containing a non-adjacent pair, reconstructed from split
//! partitions of the two one-sided neighborhoods; (iii) a solution that is
//! a clique of size at least three, reconstructed from split partitions of
//! a common neighborhood around one triangle; (iv) no solution.

use std::collections::HashSet;
use std::fmt;

use crate::graph::{Graph, VertexSet};
use crate::oracle::{canonical_subsets, ClassRecognizer};
use crate::recognizers::enumerate_split_partitions;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CandidateError {
    /// The pair must be a non-edge of distinct vertices.
    ExpectedNonEdge { u: usize, v: usize },
    /// The pair must be an edge.
    ExpectedEdge { u: usize, v: usize },
    VertexOutOfRange { v: usize, n: usize },
}

impl fmt::Display for CandidateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CandidateError::ExpectedNonEdge { u, v } => {
                write!(f, "expected a non-edge, got ({u}, {v})")
            }
            CandidateError::ExpectedEdge { u, v } => write!(f, "expected an edge, got ({u}, {v})"),
            CandidateError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for {n}-vertex graph")
            }
        }
    }
}

impl std::error::Error for CandidateError {}

fn check_range(g: &Graph, u: usize, v: usize) -> Result<(), CandidateError> {
    let n = g.vertex_count();
    for w in [u, v] {
        if w >= n {
            return Err(CandidateError::VertexOutOfRange { v: w, n });
        }
    }
    Ok(())
}

/// Maps the clique parts of all split partitions of `G[verts]` back to
/// host-graph ids. Empty iff the induced subgraph is not split.
fn clique_parts_of_induced(g: &Graph, verts: &VertexSet) -> Vec<VertexSet> {
    let (sub, map) = g.induced_subgraph(verts);
    enumerate_split_partitions(&sub)
        .iter()
        .map(|p| {
            VertexSet::from_iter(g.vertex_count(), p.clique_part.iter().map(|i| map[i])).unwrap()
        })
        .collect()
}

/// Solution candidates for a solution hitting the non-edge `uv`:
/// `{u, v} ∪ (N(u) ∩ N(v)) ∪ C_u ∪ C_v` over every pair of split partitions
/// of `G[N(u) \ N(v)]` and `G[N(v) \ N(u)]`. Empty when either side is not
/// a split graph.
pub fn candidates_from_nonedge(
    g: &Graph,
    u: usize,
    v: usize,
) -> Result<Vec<VertexSet>, CandidateError> {
    check_range(g, u, v)?;
    if u == v || g.has_edge(u, v) {
        return Err(CandidateError::ExpectedNonEdge { u, v });
    }
    let nu = g.neighbor_set(u);
    let nv = g.neighbor_set(v);
    let common = nu.intersection(&nv);
    let cliques_u = clique_parts_of_induced(g, &nu.difference(&nv));
    if cliques_u.is_empty() {
        return Ok(Vec::new());
    }
    let cliques_v = clique_parts_of_induced(g, &nv.difference(&nu));
    if cliques_v.is_empty() {
        return Ok(Vec::new());
    }

    let base = VertexSet::from_iter(g.vertex_count(), [u, v]).unwrap().union(&common);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for cu in &cliques_u {
        for cv in &cliques_v {
            let s = base.union(cu).union(cv);
            if seen.insert(s.to_vec()) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

/// Solution candidates for a clique solution containing the edge `uv`:
/// `{u, v} ∪ C` over every split partition of `G[N(u) ∩ N(v)]`. Empty when
/// the common neighborhood does not induce a split graph.
pub fn candidates_from_triangle_edge(
    g: &Graph,
    u: usize,
    v: usize,
) -> Result<Vec<VertexSet>, CandidateError> {
    check_range(g, u, v)?;
    if u == v || !g.has_edge(u, v) {
        return Err(CandidateError::ExpectedEdge { u, v });
    }
    let common = g.neighbor_set(u).intersection(&g.neighbor_set(v));
    let base = VertexSet::from_iter(g.vertex_count(), [u, v]).unwrap();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for c in clique_parts_of_induced(g, &common) {
        let s = base.union(&c);
        if seen.insert(s.to_vec()) {
            out.push(s);
        }
    }
    Ok(out)
}

fn find_triangle(g: &Graph) -> Option<(usize, usize, usize)> {
    for (u, v) in g.edges() {
        let common = g.neighbor_set(u).intersection(&g.neighbor_set(v));
        let w = common.iter().next();
        if let Some(w) = w {
            return Some((u, v, w));
        }
    }
    None
}

/// Decides partial complementation into the class recognized by `rec`,
/// which must accept only triangle-free graphs (the caller's obligation;
/// a violation voids completeness but never soundness). Returns a set `S`
/// with `rec(G ⊕ S)`, or `None`.
pub fn solve_triangle_free(g: &Graph, rec: &ClassRecognizer) -> Option<VertexSet> {
    let n = g.vertex_count();
    let mut tested: HashSet<Vec<usize>> = HashSet::new();
    let mut try_set = |s: VertexSet| -> Option<VertexSet> {
        if tested.insert(s.to_vec()) && rec.accepts(&g.partial_complement(&s).unwrap()) {
            Some(s)
        } else {
            None
        }
    };

    // step 1: all candidates of size at most two, in canonical order
    for s in canonical_subsets(n).take_while(|s| s.len() <= 2) {
        if let Some(s) = try_set(s) {
            return Some(s);
        }
    }

    // step 2: solutions hitting a non-edge
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            for s in candidates_from_nonedge(g, u, v).unwrap() {
                if let Some(s) = try_set(s) {
                    return Some(s);
                }
            }
        }
    }

    // steps 3-4: clique solutions force a triangle; two of any triangle's
    // vertices lie in the solution, so its three edges cover the guesses.
    // No triangle at this point means no solution at all.
    if let Some((x, y, z)) = find_triangle(g) {
        for (u, v) in [(x, y), (x, z), (y, z)] {
            for s in candidates_from_triangle_edge(g, u, v).unwrap() {
                if let Some(s) = try_set(s) {
                    return Some(s);
                }
            }
        }
    }

    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::nonisomorphic_graphs_up_to;
    use crate::oracle::oracle_solve;
    use crate::recognizers::Target;

    fn ids(sets: &[VertexSet]) -> Vec<Vec<usize>> {
        sets.iter().map(|s| s.to_vec()).collect()
    }

    #[test]
    fn c5_to_bipartite_finds_a_witness() {
        let g = Graph::cycle(5);
        let rec = Target::Bipartite.recognizer();
        let s = solve_triangle_free(&g, &rec).unwrap();
        assert!(rec.accepts(&g.partial_complement(&s).unwrap()));
        assert!(oracle_solve(&g, &rec).is_some());
    }

    #[test]
    fn graph_already_in_class_yields_empty_witness() {
        let rec = Target::TriangleFree.recognizer();
        for g in [Graph::empty(4), Graph::cycle(5), Graph::path(6)] {
            let s = solve_triangle_free(&g, &rec).unwrap();
            assert!(s.is_empty(), "expected empty witness for {g:?}");
        }
    }

    #[test]
    fn k4_can_reach_triangle_free() {
        let g = Graph::complete(4);
        let rec = Target::TriangleFree.recognizer();
        let s = solve_triangle_free(&g, &rec).unwrap();
        assert!(rec.accepts(&g.partial_complement(&s).unwrap()));
    }

    #[test]
    fn nonedge_candidates_contain_base_set() {
        // C5 with u, v at distance two: every candidate is a superset of
        // {u, v} plus the common neighborhood
        let g = Graph::cycle(5);
        let cands = candidates_from_nonedge(&g, 0, 2).unwrap();
        assert!(!cands.is_empty());
        let base = VertexSet::from_iter(5, [0, 1, 2]).unwrap();
        for s in &cands {
            assert!(base.is_subset_of(s), "{s:?} misses {base:?}");
        }
    }

    #[test]
    fn isolated_twins_yield_single_candidate() {
        let g = Graph::empty(3);
        let cands = candidates_from_nonedge(&g, 0, 1).unwrap();
        assert_eq!(ids(&cands), vec![vec![0, 1]]);
    }

    #[test]
    fn non_split_side_yields_no_candidates() {
        // vertex 0 sees a C4 on {2,3,4,5}; vertex 1 is isolated
        let g = Graph::from_edges(
            6,
            &[(0, 2), (0, 3), (0, 4), (0, 5), (2, 3), (3, 4), (4, 5), (2, 5)],
        )
        .unwrap();
        assert!(candidates_from_nonedge(&g, 0, 1).unwrap().is_empty());
    }

    #[test]
    fn nonedge_precondition_enforced() {
        let g = Graph::path(3);
        assert_eq!(
            candidates_from_nonedge(&g, 0, 1),
            Err(CandidateError::ExpectedNonEdge { u: 0, v: 1 })
        );
        assert_eq!(
            candidates_from_nonedge(&g, 1, 1),
            Err(CandidateError::ExpectedNonEdge { u: 1, v: 1 })
        );
        assert_eq!(
            candidates_from_nonedge(&g, 0, 9),
            Err(CandidateError::VertexOutOfRange { v: 9, n: 3 })
        );
    }

    #[test]
    fn triangle_edge_candidates_on_k4() {
        // common neighborhood of the edge (0,1) is the K2 on {2,3}; its
        // split partitions have clique parts {2,3}, {2}, {3}
        let g = Graph::complete(4);
        let mut cands = ids(&candidates_from_triangle_edge(&g, 0, 1).unwrap());
        cands.sort();
        assert_eq!(cands, vec![vec![0, 1, 2], vec![0, 1, 2, 3], vec![0, 1, 3]]);
    }

    #[test]
    fn triangle_edge_candidates_with_pendant() {
        // triangle {0,1,2} with a pendant 3 on vertex 0; for the edge (0,1)
        // the single common neighbor 2 gives clique parts {2} and {}
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        let mut cands = ids(&candidates_from_triangle_edge(&g, 0, 1).unwrap());
        cands.sort();
        assert_eq!(cands, vec![vec![0, 1], vec![0, 1, 2]]);
    }

    #[test]
    fn triangle_edge_empty_common_neighborhood() {
        let g = Graph::path(4);
        let cands = candidates_from_triangle_edge(&g, 0, 1).unwrap();
        assert_eq!(ids(&cands), vec![vec![0, 1]]);
    }

    #[test]
    fn triangle_edge_precondition_enforced() {
        let g = Graph::path(3);
        assert_eq!(
            candidates_from_triangle_edge(&g, 0, 2),
            Err(CandidateError::ExpectedEdge { u: 0, v: 2 })
        );
    }

    #[test]
    fn agrees_with_oracle_on_small_graphs() {
        // full differential sweep over n <= 7 lives in the acceptance suite
        for target in [Target::Bipartite, Target::TriangleFree, Target::Forest] {
            let rec = target.recognizer();
            for g in nonisomorphic_graphs_up_to(5) {
                let fast = solve_triangle_free(g, &rec);
                let exact = oracle_solve(g, &rec);
                assert_eq!(fast.is_some(), exact.is_some(), "{target:?} on {g:?}");
                if let Some(s) = fast {
                    assert!(rec.accepts(&g.partial_complement(&s).unwrap()));
                }
            }
        }
    }

    #[test]
    fn witnesses_have_no_independent_triple() {
        // any independent triple inside S becomes a triangle in G ⊕ S
        let rec = Target::TriangleFree.recognizer();
        for g in nonisomorphic_graphs_up_to(6) {
            if let Some(s) = solve_triangle_free(g, &rec) {
                if s.len() < 3 {
                    continue;
                }
                let members = s.to_vec();
                for (a, &u) in members.iter().enumerate() {
                    for (b, &v) in members.iter().enumerate().skip(a + 1) {
                        for &w in &members[b + 1..] {
                            assert!(
                                g.has_edge(u, v) || g.has_edge(u, w) || g.has_edge(v, w),
                                "independent triple {u},{v},{w} in witness of {g:?}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn candidate_volume_stays_polynomial() {
        // at most n+1 split partitions per side, so at most (n+1)^2
        // candidates per non-edge
        for g in nonisomorphic_graphs_up_to(6) {
            let n = g.vertex_count();
            for u in 0..n {
                for v in u + 1..n {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    let cands = candidates_from_nonedge(g, u, v).unwrap();
                    assert!(cands.len() <= (n + 1) * (n + 1));
                }
            }
        }
    }
}
