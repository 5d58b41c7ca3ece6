//! Graph and vertex-set primitives: bit-row adjacency and the partial
//! complement operation.
//!
//! Vertices are dense ids `0..n`. Adjacency is stored as one bit row per
//! vertex so that complementing inside a vertex set is a masked XOR per row.

use std::fmt;

/// Errors from graph and vertex-set construction and operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// An edge `(v, v)` was supplied.
    SelfLoop { v: usize },
    /// A vertex id is not in `0..n`.
    VertexOutOfRange { v: usize, n: usize },
    /// The same edge was supplied twice.
    DuplicateEdge { u: usize, v: usize },
    /// A vertex set built over one universe was applied to a graph of
    /// a different order.
    UniverseMismatch { set: usize, graph: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphError::SelfLoop { v } => write!(f, "self-loop at vertex {v}"),
            GraphError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for {n}-vertex graph")
            }
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            GraphError::UniverseMismatch { set, graph } => {
                write!(f, "vertex set over universe {set} applied to {graph}-vertex graph")
            }
        }
    }
}

impl std::error::Error for GraphError {}

const WORD_BITS: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// A subset of the vertices `0..n` of some host graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    bits: Vec<u64>,
}

impl VertexSet {
    /// The empty subset of `0..n`.
    pub fn empty(n: usize) -> Self {
        VertexSet { n, bits: vec![0; words_for(n)] }
    }

    /// The full subset `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    /// The one-element subset `{v}`.
    pub fn singleton(n: usize, v: usize) -> Result<Self, GraphError> {
        Self::from_iter(n, [v])
    }

    /// Builds a set from vertex ids, rejecting ids outside `0..n`.
    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, ids: I) -> Result<Self, GraphError> {
        let mut s = Self::empty(n);
        for v in ids {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Size of the universe this set lives in.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.bits[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// Inserts `v`. Panics if `v` is outside the universe.
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} outside universe {}", self.n);
        self.bits[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.bits[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        }
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.contains(v))
    }

    /// Members as a sorted vector.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n);
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a | b).collect();
        VertexSet { n: self.n, bits }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n);
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a & b).collect();
        VertexSet { n: self.n, bits }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n);
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a & !b).collect();
        VertexSet { n: self.n, bits }
    }

    /// Complement within the universe.
    pub fn complement(&self) -> VertexSet {
        let mut s = Self::full(self.n);
        for w in 0..self.bits.len() {
            s.bits[w] &= !self.bits[w];
        }
        s
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.bits
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// No self-loops; adjacency is symmetric. Immutable after construction:
/// build via [`GraphBuilder`], [`Graph::from_edges`], or the shape
/// constructors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph { n, words, rows: vec![0; n * words] }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                b.add_edge(u, v);
            }
        }
        b.build()
    }

    /// The path `P_n` with edges `i (i+1)`.
    pub fn path(n: usize) -> Self {
        let mut b = GraphBuilder::new(n);
        for i in 1..n {
            b.add_edge(i - 1, i);
        }
        b.build()
    }

    /// The cycle `C_n` (edgeless for `n < 3`).
    pub fn cycle(n: usize) -> Self {
        if n < 3 {
            return Self::empty(n);
        }
        let mut b = GraphBuilder::new(n);
        for i in 0..n {
            b.add_edge(i, (i + 1) % n);
        }
        b.build()
    }

    /// The complete bipartite graph with parts `0..n1` and `n1..n1+n2`.
    pub fn complete_bipartite(n1: usize, n2: usize) -> Self {
        let mut b = GraphBuilder::new(n1 + n2);
        for u in 0..n1 {
            for v in n1..n1 + n2 {
                b.add_edge(u, v);
            }
        }
        b.build()
    }

    /// Builds a graph from an edge list, rejecting self-loops, ids `>= n`,
    /// and repeated edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop { v: u });
            }
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if b.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            b.add_edge(u, v);
        }
        Ok(b.build())
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.rows[u * self.words + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        let row = &self.rows[v * self.words..(v + 1) * self.words];
        row.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    /// Open neighborhood `N(v)` as a set.
    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet { n: self.n, bits: self.rows[v * self.words..(v + 1) * self.words].to_vec() }
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighbor_set(&self, v: usize) -> VertexSet {
        let mut s = self.neighbor_set(v);
        s.insert(v);
        s
    }

    /// All edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The partial complement `G ⊕ S`: pairs with both endpoints in `S`
    /// flip adjacency, every other pair is untouched.
    pub fn partial_complement(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        if s.universe() != self.n {
            return Err(GraphError::UniverseMismatch { set: s.universe(), graph: self.n });
        }
        let mut g = self.clone();
        for u in s.iter() {
            let row = &mut g.rows[u * self.words..(u + 1) * self.words];
            for (w, sw) in row.iter_mut().zip(s.words()) {
                *w ^= sw;
            }
            // the XOR also flipped the diagonal bit for u itself
            row[u / WORD_BITS] &= !(1 << (u % WORD_BITS));
        }
        Ok(g)
    }

    /// The full complement, i.e. `G ⊕ V(G)`.
    pub fn complement(&self) -> Graph {
        self.partial_complement(&VertexSet::full(self.n)).unwrap()
    }

    /// Induced subgraph on `verts`; second component maps new ids to the
    /// original ids in increasing order.
    pub fn induced_subgraph(&self, verts: &VertexSet) -> (Graph, Vec<usize>) {
        assert_eq!(verts.universe(), self.n);
        let map: Vec<usize> = verts.iter().collect();
        let mut b = GraphBuilder::new(map.len());
        for i in 0..map.len() {
            for j in i + 1..map.len() {
                if self.has_edge(map[i], map[j]) {
                    b.add_edge(i, j);
                }
            }
        }
        (b.build(), map)
    }

    /// True if `verts` induces a clique.
    pub fn is_clique(&self, verts: &VertexSet) -> bool {
        let ids = verts.to_vec();
        ids.iter()
            .enumerate()
            .all(|(i, &u)| ids[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// True if `verts` induces an independent set.
    pub fn is_independent_set(&self, verts: &VertexSet) -> bool {
        let ids = verts.to_vec();
        ids.iter()
            .enumerate()
            .all(|(i, &u)| ids[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut b = GraphBuilder::new(self.n + other.n);
        for (u, v) in self.edges() {
            b.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            b.add_edge(self.n + u, self.n + v);
        }
        b.build()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Incremental construction of a [`Graph`]; the result is immutable.
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    g: Graph,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder { g: Graph::empty(n) }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.g.has_edge(u, v)
    }

    /// Adds the edge `uv`. Panics on self-loops or out-of-range ids;
    /// adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at vertex {u}");
        assert!(u < self.g.n && v < self.g.n, "edge ({u}, {v}) out of range");
        let words = self.g.words;
        self.g.rows[u * words + v / WORD_BITS] |= 1 << (v % WORD_BITS);
        self.g.rows[v * words + u / WORD_BITS] |= 1 << (u % WORD_BITS);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        let words = self.g.words;
        self.g.rows[u * words + v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        self.g.rows[v * words + u / WORD_BITS] &= !(1 << (u % WORD_BITS));
    }

    pub fn build(self) -> Graph {
        self.g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vset(n: usize, ids: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, ids.iter().copied()).unwrap()
    }

    #[test]
    fn empty_set_changes_nothing() {
        for g in [Graph::cycle(5), Graph::complete(4), Graph::empty(3)] {
            let n = g.vertex_count();
            assert_eq!(g.partial_complement(&VertexSet::empty(n)).unwrap(), g);
        }
    }

    #[test]
    fn full_set_is_graph_complement() {
        let k4 = Graph::complete(4);
        let c = k4.partial_complement(&VertexSet::full(4)).unwrap();
        assert_eq!(c.edge_count(), 0);
        assert_eq!(c.vertex_count(), 4);
    }

    #[test]
    fn flipping_one_nonedge_of_p3_gives_triangle() {
        // P3 = a-b-c with a=0, b=1, c=2; S = {a, c} flips the non-edge ac
        let p3 = Graph::path(3);
        let t = p3.partial_complement(&vset(3, &[0, 2])).unwrap();
        assert_eq!(t, Graph::complete(3));
    }

    #[test]
    fn singleton_is_neutral() {
        let g = Graph::cycle(6);
        for v in 0..6 {
            assert_eq!(g.partial_complement(&vset(6, &[v])).unwrap(), g);
        }
    }

    #[test]
    fn universe_mismatch_rejected() {
        let g = Graph::cycle(5);
        let s = VertexSet::full(4);
        assert_eq!(
            g.partial_complement(&s),
            Err(GraphError::UniverseMismatch { set: 4, graph: 5 })
        );
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(2, &[(0, 0)]), Err(GraphError::SelfLoop { v: 0 }));
        assert_eq!(
            Graph::from_edges(2, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { v: 3, n: 2 })
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (0, 1)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
    }

    #[test]
    fn vertex_set_from_iter_rejects_out_of_range() {
        assert_eq!(
            VertexSet::from_iter(3, [0, 5]),
            Err(GraphError::VertexOutOfRange { v: 5, n: 3 })
        );
    }

    #[test]
    fn induced_subgraph_keeps_adjacency() {
        let c5 = Graph::cycle(5);
        let (sub, map) = c5.induced_subgraph(&vset(5, &[0, 1, 3]));
        assert_eq!(map, vec![0, 1, 3]);
        assert!(sub.has_edge(0, 1));
        assert!(!sub.has_edge(0, 2));
        assert!(!sub.has_edge(1, 2));
    }

    #[test]
    fn multiword_graphs_work() {
        // 100 vertices spans two words per row
        let mut b = GraphBuilder::new(100);
        b.add_edge(0, 99);
        b.add_edge(63, 64);
        let g = b.build();
        assert!(g.has_edge(99, 0));
        assert!(g.has_edge(64, 63));
        assert_eq!(g.edge_count(), 2);
        let s = VertexSet::from_iter(100, [0, 99, 50]).unwrap();
        let h = g.partial_complement(&s).unwrap();
        assert!(!h.has_edge(0, 99));
        assert!(h.has_edge(0, 50));
        assert!(h.has_edge(99, 50));
        assert!(h.has_edge(63, 64));
        assert_eq!(h.partial_complement(&s).unwrap(), g);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        /// Random graph on up to 8 vertices plus a random subset, encoded
        /// as bitmasks.
        fn graph_and_set() -> impl Strategy<Value = (Graph, VertexSet)> {
            (1usize..=8).prop_flat_map(|n| {
                let pairs = n * (n - 1) / 2;
                (Just(n), 0u64..(1 << pairs), 0u64..(1u64 << n))
            }).prop_map(|(n, emask, smask)| {
                let mut b = GraphBuilder::new(n);
                let mut p = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if emask >> p & 1 == 1 {
                            b.add_edge(u, v);
                        }
                        p += 1;
                    }
                }
                let s = VertexSet::from_iter(n, (0..n).filter(|&v| smask >> v & 1 == 1))
                    .unwrap();
                (b.build(), s)
            })
        }

        proptest! {
            #[test]
            fn involution((g, s) in graph_and_set()) {
                let once = g.partial_complement(&s).unwrap();
                let twice = once.partial_complement(&s).unwrap();
                prop_assert_eq!(twice, g);
            }

            #[test]
            fn locality_outside_s((g, s) in graph_and_set()) {
                let h = g.partial_complement(&s).unwrap();
                for u in g.vertices() {
                    if !s.contains(u) {
                        prop_assert_eq!(g.neighbor_set(u), h.neighbor_set(u));
                    }
                }
            }

            #[test]
            fn flip_rule_pointwise((g, s) in graph_and_set()) {
                let h = g.partial_complement(&s).unwrap();
                for u in g.vertices() {
                    for v in u + 1..g.vertex_count() {
                        let expect = if s.contains(u) && s.contains(v) {
                            !g.has_edge(u, v)
                        } else {
                            g.has_edge(u, v)
                        };
                        prop_assert_eq!(h.has_edge(u, v), expect);
                    }
                }
            }
        }
    }
}
