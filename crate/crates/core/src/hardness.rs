//! The hardness construction for partial complementation to `r`-regular
//! graphs: a degree-deficit gadget, the many-one reduction from clique
//! finding in regular graphs, planted solutions for the forward direction,
//! and the certificate checker.

use std::fmt;

use crate::graph::{Graph, GraphBuilder, VertexSet};
use crate::recognizers::is_r_regular;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HardnessError {
    /// Gadget needs `r > k`, `r - k` even, `k >= 2`.
    InvalidParameters { k: usize, r: usize, reason: &'static str },
    /// The reduction input must be regular.
    NotRegular,
    /// The planted set must be a k-clique of the embedded input graph.
    InvalidWitness { reason: String },
}

impl fmt::Display for HardnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HardnessError::InvalidParameters { k, r, reason } => {
                write!(f, "invalid gadget parameters k={k}, r={r}: {reason}")
            }
            HardnessError::NotRegular => write!(f, "input graph is not regular"),
            HardnessError::InvalidWitness { reason } => write!(f, "invalid witness: {reason}"),
        }
    }
}

impl std::error::Error for HardnessError {}

/// The gadget: a clique on `k-1` vertices and `k-1` rewired copies of
/// `K_{r,r}`. Every bipartite-block vertex ends up with degree `r` while
/// the clique vertices sit at `r-2`, the deficit the planted solution
/// repairs.
#[derive(Debug, Clone)]
pub struct Gadget {
    pub graph: Graph,
    /// The clique vertices `c_1 .. c_{k-1}`.
    pub clique_vertices: Vec<usize>,
    /// For each block `i`, the vertices `a^i_1 .. a^i_r`.
    pub a_blocks: Vec<Vec<usize>>,
    /// For each block `i`, the vertices `b^i_1 .. b^i_r`.
    pub b_blocks: Vec<Vec<usize>>,
}

/// Builds the gadget for parameters `r > k >= 2` with `r - k` even:
/// `c_i` gains an edge to the first `(r-k)/2` vertices of each side of its
/// block, and the matching edges `a^i_j b^i_j` between those vertices are
/// removed.
pub fn build_gadget(k: usize, r: usize) -> Result<Gadget, HardnessError> {
    if k < 2 {
        return Err(HardnessError::InvalidParameters { k, r, reason: "k must be at least 2" });
    }
    if r <= k {
        return Err(HardnessError::InvalidParameters { k, r, reason: "r must exceed k" });
    }
    if !(r - k).is_multiple_of(2) {
        return Err(HardnessError::InvalidParameters { k, r, reason: "r - k must be even" });
    }
    let blocks = k - 1;
    let n = blocks + 2 * r * blocks;
    let mut b = GraphBuilder::new(n);

    let clique_vertices: Vec<usize> = (0..blocks).collect();
    for i in 0..blocks {
        for j in i + 1..blocks {
            b.add_edge(i, j);
        }
    }

    let mut a_blocks = Vec::with_capacity(blocks);
    let mut b_blocks = Vec::with_capacity(blocks);
    let rewired = (r - k) / 2;
    for i in 0..blocks {
        let base = blocks + i * 2 * r;
        let a_side: Vec<usize> = (base..base + r).collect();
        let b_side: Vec<usize> = (base + r..base + 2 * r).collect();
        for &a in &a_side {
            for &bb in &b_side {
                b.add_edge(a, bb);
            }
        }
        for j in 0..rewired {
            b.add_edge(clique_vertices[i], a_side[j]);
            b.add_edge(clique_vertices[i], b_side[j]);
            b.remove_edge(a_side[j], b_side[j]);
        }
        a_blocks.push(a_side);
        b_blocks.push(b_side);
    }
    Ok(Gadget { graph: b.build(), clique_vertices, a_blocks, b_blocks })
}

/// How the reduction produced its output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Step 1 solved the clique instance by brute force: yes.
    TrivialYes,
    /// Step 1 solved the clique instance by brute force: no.
    TrivialNo,
    /// Step 3 built the disjoint union with the gadget; `doubled` records
    /// whether step 2 duplicated the graph first.
    Constructed { doubled: bool },
}

impl Provenance {
    pub fn name(&self) -> &'static str {
        match self {
            Provenance::TrivialYes => "trivial-yes",
            Provenance::TrivialNo => "trivial-no",
            Provenance::Constructed { doubled: false } => "constructed",
            Provenance::Constructed { doubled: true } => "constructed-doubled",
        }
    }
}

/// The reduction's output instance plus the bookkeeping needed to plant
/// and interpret solutions.
#[derive(Debug, Clone)]
pub struct ReductionOutput {
    pub graph: Graph,
    /// Target regularity (the input's, plus one if doubling occurred).
    pub regularity: usize,
    pub provenance: Provenance,
    /// Embedding of the original vertices into `graph` (the first copy if
    /// doubling occurred); empty for trivial instances.
    pub vertex_map: Vec<usize>,
    /// Ids of the gadget clique inside `graph`; empty for trivial instances.
    pub gadget_clique: Vec<usize>,
    /// The clique size the instance encodes.
    pub k: usize,
}

/// Many-one reduction from "does the r-regular graph `g` contain a
/// k-clique" to partial complementation to r-regularity.
///
/// Step 1: for `k < 7` or `k >= r` the clique question is answered by
/// brute force and a canonical trivial instance is returned — `(K_{r+1}, r)`
/// for yes, `(K_1, 1)` for no. Step 2: for odd `r - k` the graph is doubled
/// across a perfect matching, raising `r` by one. Step 3: disjoint union
/// with the gadget.
pub fn reduce_clique_to_regular(g: &Graph, k: usize) -> Result<ReductionOutput, HardnessError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(HardnessError::NotRegular);
    }
    let r = g.degree(0);
    if !is_r_regular(g, r) {
        return Err(HardnessError::NotRegular);
    }

    if k < 7 || k >= r {
        return Ok(if has_clique(g, k) {
            ReductionOutput {
                graph: Graph::complete(r + 1),
                regularity: r,
                provenance: Provenance::TrivialYes,
                vertex_map: Vec::new(),
                gadget_clique: Vec::new(),
                k,
            }
        } else {
            ReductionOutput {
                graph: Graph::complete(1),
                regularity: 1,
                provenance: Provenance::TrivialNo,
                vertex_map: Vec::new(),
                gadget_clique: Vec::new(),
                k,
            }
        });
    }

    let doubled = (r - k) % 2 == 1;
    let (host, regularity) = if doubled {
        let mut b = GraphBuilder::new(2 * n);
        for (u, v) in g.edges() {
            b.add_edge(u, v);
            b.add_edge(n + u, n + v);
        }
        for v in 0..n {
            b.add_edge(v, n + v);
        }
        (b.build(), r + 1)
    } else {
        (g.clone(), r)
    };

    let gadget = build_gadget(k, regularity)?;
    let offset = host.vertex_count();
    let graph = host.disjoint_union(&gadget.graph);
    Ok(ReductionOutput {
        graph,
        regularity,
        provenance: Provenance::Constructed { doubled },
        vertex_map: (0..n).collect(),
        gadget_clique: gadget.clique_vertices.iter().map(|&c| c + offset).collect(),
        k,
    })
}

/// The forward-direction witness: the image of a k-clique `c` of the
/// original graph together with the gadget clique. The partial complement
/// by this set is `regularity`-regular.
pub fn planted_solution(
    out: &ReductionOutput,
    c: &VertexSet,
) -> Result<VertexSet, HardnessError> {
    if !matches!(out.provenance, Provenance::Constructed { .. }) {
        return Err(HardnessError::InvalidWitness {
            reason: "trivial instances embed no copy of the input".into(),
        });
    }
    if c.universe() != out.vertex_map.len() {
        return Err(HardnessError::InvalidWitness {
            reason: format!(
                "witness universe {} does not match the input graph ({} vertices)",
                c.universe(),
                out.vertex_map.len()
            ),
        });
    }
    if c.len() != out.k {
        return Err(HardnessError::InvalidWitness {
            reason: format!("expected a clique of size {}, got {}", out.k, c.len()),
        });
    }
    let image: Vec<usize> = c.iter().map(|v| out.vertex_map[v]).collect();
    for (i, &u) in image.iter().enumerate() {
        for &v in &image[i + 1..] {
            if !out.graph.has_edge(u, v) {
                return Err(HardnessError::InvalidWitness {
                    reason: format!("vertices {u} and {v} are not adjacent"),
                });
            }
        }
    }
    let mut s = VertexSet::empty(out.graph.vertex_count());
    for v in image.into_iter().chain(out.gadget_clique.iter().copied()) {
        s.insert(v);
    }
    Ok(s)
}

/// Certificate check for the regular-target problem: does `G ⊕ S` have
/// every degree equal to `r`?
pub fn verify_regular_solution(g: &Graph, r: usize, s: &VertexSet) -> bool {
    let flipped = g.partial_complement(s).expect("witness must match the graph's vertex set");
    is_r_regular(&flipped, r)
}

/// Branch-and-bound clique search: candidates are pruned by degree within
/// the candidate set and branches stop as soon as too few candidates
/// remain. Exponential in the worst case; the reduction only falls back to
/// it for `k < 7` or `k >= r`, where the gadget construction does not apply.
pub fn has_clique(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if k > g.vertex_count() {
        return false;
    }
    let cands = VertexSet::full(g.vertex_count());
    extend_clique(g, &cands, k)
}

fn extend_clique(g: &Graph, cands: &VertexSet, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    if cands.len() < need {
        return false;
    }
    // degree pruning: a member with too few candidate neighbors can never
    // complete the clique
    let mut pruned = cands.clone();
    let mut changed = true;
    while changed {
        changed = false;
        for v in pruned.clone().iter() {
            if g.neighbor_set(v).intersection(&pruned).len() < need - 1 {
                pruned.remove(v);
                changed = true;
            }
        }
    }
    if pruned.len() < need {
        return false;
    }
    let mut rest = pruned.clone();
    for v in pruned.iter() {
        rest.remove(v);
        if rest.len() + 1 < need {
            return false;
        }
        let next = g.neighbor_set(v).intersection(&rest);
        if extend_clique(g, &next, need - 1) {
            return true;
        }
    }
    false
}
