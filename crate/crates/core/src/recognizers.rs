//! Membership predicates for the target graph classes, including split-graph
//! recognition and full split-partition enumeration.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::graph::{Graph, VertexSet};
use crate::oracle::ClassRecognizer;

pub fn is_triangle_free(g: &Graph) -> bool {
    for (u, v) in g.edges() {
        if !g.neighbor_set(u).intersection(&g.neighbor_set(v)).is_empty() {
            return false;
        }
    }
    true
}

pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut color = vec![None; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(!color[u].unwrap());
                        queue.push_back(v);
                    }
                    Some(c) if c == color[u].unwrap() => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

pub fn is_forest(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut components = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    g.edge_count() == n - components
}

pub fn is_r_regular(g: &Graph, r: usize) -> bool {
    g.vertices().all(|v| g.degree(v) == r)
}

pub fn max_degree_at_most(g: &Graph, r: usize) -> bool {
    g.max_degree() <= r
}

/// Decides `d`-degeneracy by iterated minimum-degree peeling.
pub fn is_d_degenerate(g: &Graph, d: usize) -> bool {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| degree[v])
            .unwrap();
        if degree[v] > d {
            return false;
        }
        alive[v] = false;
        for u in g.neighbors(v) {
            if alive[u] {
                degree[u] -= 1;
            }
        }
    }
    true
}

/// A partition of `V(G)` into a clique and an independent set.
#[derive(Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique_part: VertexSet,
    pub independent_part: VertexSet,
}

impl SplitPartition {
    /// Checks the defining invariants against a host graph.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        self.clique_part.universe() == n
            && self.independent_part.universe() == n
            && self.clique_part.intersection(&self.independent_part).is_empty()
            && self.clique_part.union(&self.independent_part).len() == n
            && g.is_clique(&self.clique_part)
            && g.is_independent_set(&self.independent_part)
    }
}

impl fmt::Debug for SplitPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SplitPartition(C={:?}, I={:?})", self.clique_part, self.independent_part)
    }
}

fn sorted_degrees_desc(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

/// Hammer–Simeone degree-sequence criterion: with degrees sorted descending
/// and `m = max{i : d_i >= i-1}`, the graph is split iff
/// `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`.
pub fn is_split(g: &Graph) -> bool {
    let d = sorted_degrees_desc(g);
    let n = d.len();
    if n == 0 {
        return true;
    }
    let m = (1..=n).rev().find(|&i| d[i - 1] >= i - 1).unwrap_or(0);
    let head: usize = d[..m].iter().sum();
    let tail: usize = d[m..].iter().sum();
    head == m * (m - 1) + tail
}

/// One split partition from the degree criterion: the `m` vertices of
/// largest degree as the clique part. Returns `None` for non-split graphs.
fn degree_criterion_partition(g: &Graph) -> Option<SplitPartition> {
    if !is_split(g) {
        return None;
    }
    let n = g.vertex_count();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let d = sorted_degrees_desc(g);
    let m = (1..=n).rev().find(|&i| d[i - 1] >= i - 1).unwrap_or(0);
    let clique_part = VertexSet::from_iter(n, by_degree[..m].iter().copied()).unwrap();
    let p = SplitPartition { independent_part: clique_part.complement(), clique_part };
    p.is_valid_for(g).then_some(p)
}

/// Every split partition of `g`, ordered by clique-part size descending and
/// then lexicographically. Non-split graphs yield the empty list.
///
/// Starts from the degree-criterion partition and closes under single-vertex
/// moves between the parts: any two split partitions differ by at most one
/// vertex on each side, and every such swap factors through a valid
/// intermediate partition, so the closure is exhaustive. Each generated
/// candidate is validated before it is kept. Should the seed ever fail
/// validation, a full bipartition scan covers graphs up to 16 vertices.
pub fn enumerate_split_partitions(g: &Graph) -> Vec<SplitPartition> {
    let n = g.vertex_count();
    if n == 0 {
        return vec![SplitPartition {
            clique_part: VertexSet::empty(0),
            independent_part: VertexSet::empty(0),
        }];
    }
    if !is_split(g) {
        return Vec::new();
    }
    let mut found = match degree_criterion_partition(g) {
        Some(seed) => closure_under_moves(g, seed),
        None => {
            debug_assert!(false, "degree-criterion seed failed validation");
            assert!(n <= 16, "split-partition fallback scan limited to 16 vertices");
            bipartition_scan(g)
        }
    };
    found.sort_by(|a, b| {
        b.clique_part
            .len()
            .cmp(&a.clique_part.len())
            .then_with(|| a.clique_part.to_vec().cmp(&b.clique_part.to_vec()))
    });
    found
}

fn closure_under_moves(g: &Graph, seed: SplitPartition) -> Vec<SplitPartition> {
    let n = g.vertex_count();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = VecDeque::from([seed.clone()]);
    seen.insert(seed.clique_part.to_vec());
    let mut out = vec![seed];
    while let Some(p) = queue.pop_front() {
        for v in 0..n {
            let mut clique_part = p.clique_part.clone();
            if clique_part.contains(v) {
                clique_part.remove(v);
            } else {
                clique_part.insert(v);
            }
            if seen.contains(&clique_part.to_vec()) {
                continue;
            }
            let cand = SplitPartition {
                independent_part: clique_part.complement(),
                clique_part,
            };
            if cand.is_valid_for(g) {
                seen.insert(cand.clique_part.to_vec());
                queue.push_back(cand.clone());
                out.push(cand);
            }
        }
    }
    out
}

fn bipartition_scan(g: &Graph) -> Vec<SplitPartition> {
    let n = g.vertex_count();
    (0u64..1 << n)
        .map(|mask| {
            let clique_part =
                VertexSet::from_iter(n, (0..n).filter(|&v| mask >> v & 1 == 1)).unwrap();
            SplitPartition { independent_part: clique_part.complement(), clique_part }
        })
        .filter(|p| p.is_valid_for(g))
        .collect()
}

/// A target class the CLI can name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    TriangleFree,
    Bipartite,
    Forest,
    Split,
    RRegular(usize),
    Degenerate(usize),
    MaxDegree(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetParseError(pub String);

impl fmt::Display for TargetParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown target class `{}`", self.0)
    }
}

impl std::error::Error for TargetParseError {}

impl std::str::FromStr for Target {
    type Err = TargetParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || TargetParseError(s.to_string());
        match s {
            "triangle-free" => Ok(Target::TriangleFree),
            "bipartite" => Ok(Target::Bipartite),
            "forest" => Ok(Target::Forest),
            "split" => Ok(Target::Split),
            _ => {
                let (head, arg) = s.split_once(':').ok_or_else(bad)?;
                let value: usize = arg.parse().map_err(|_| bad())?;
                match head {
                    "r-regular" => Ok(Target::RRegular(value)),
                    "degenerate" => Ok(Target::Degenerate(value)),
                    "max-degree" => Ok(Target::MaxDegree(value)),
                    _ => Err(bad()),
                }
            }
        }
    }
}

impl Target {
    pub fn name(&self) -> String {
        match self {
            Target::TriangleFree => "triangle-free".into(),
            Target::Bipartite => "bipartite".into(),
            Target::Forest => "forest".into(),
            Target::Split => "split".into(),
            Target::RRegular(r) => format!("r-regular:{r}"),
            Target::Degenerate(d) => format!("degenerate:{d}"),
            Target::MaxDegree(r) => format!("max-degree:{r}"),
        }
    }

    pub fn recognizer(&self) -> ClassRecognizer {
        let name = self.name();
        match *self {
            Target::TriangleFree => ClassRecognizer::new(name, is_triangle_free),
            Target::Bipartite => ClassRecognizer::new(name, is_bipartite),
            Target::Forest => ClassRecognizer::new(name, is_forest),
            Target::Split => ClassRecognizer::new(name, is_split),
            Target::RRegular(r) => ClassRecognizer::new(name, move |g| is_r_regular(g, r)),
            Target::Degenerate(d) => ClassRecognizer::new(name, move |g| is_d_degenerate(g, d)),
            Target::MaxDegree(r) => ClassRecognizer::new(name, move |g| max_degree_at_most(g, r)),
        }
    }

    /// True when every member of the class is triangle-free, making the
    /// class admissible for the triangle-free solver.
    pub fn is_triangle_free_class(&self) -> bool {
        matches!(self, Target::TriangleFree | Target::Bipartite | Target::Forest)
    }

    /// `Some(d)` when every member of the class is `d`-degenerate.
    pub fn degeneracy_bound(&self) -> Option<usize> {
        match *self {
            Target::Forest => Some(1),
            Target::Degenerate(d) => Some(d),
            Target::RRegular(r) => Some(r),
            Target::MaxDegree(r) => Some(r),
            _ => None,
        }
    }
}
