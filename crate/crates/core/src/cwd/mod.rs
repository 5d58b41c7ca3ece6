//! Clique-width expression trees: evaluation, width, irredundancy, and the
//! transformation that realizes a partial complementation on the expression
//! itself at the cost of tripling the label count.

mod parse;
mod transform;

pub use parse::{parse_expression, print_expression, CwParseError};
pub use transform::transform_partial_complement;

use std::collections::HashSet;
use std::fmt;

use crate::graph::{Graph, GraphBuilder};

pub type Label = u32;

/// A rooted expression tree over introduce, union, relabel, and join nodes.
#[derive(Clone, PartialEq, Eq)]
pub enum CwExpression {
    /// A single vertex carrying a label.
    Intro { label: Label, name: String },
    /// Disjoint union of two subexpressions.
    Union(Box<CwExpression>, Box<CwExpression>),
    /// Renames every `from`-labeled vertex to `to`.
    Relabel { from: Label, to: Label, child: Box<CwExpression> },
    /// Connects every `a`-labeled vertex with every `b`-labeled vertex.
    Join { a: Label, b: Label, child: Box<CwExpression> },
}

impl CwExpression {
    pub fn intro(label: Label, name: impl Into<String>) -> Self {
        CwExpression::Intro { label, name: name.into() }
    }

    pub fn union(left: CwExpression, right: CwExpression) -> Self {
        CwExpression::Union(Box::new(left), Box::new(right))
    }

    pub fn relabel(from: Label, to: Label, child: CwExpression) -> Self {
        CwExpression::Relabel { from, to, child: Box::new(child) }
    }

    pub fn join(a: Label, b: Label, child: CwExpression) -> Self {
        CwExpression::Join { a, b, child: Box::new(child) }
    }

    /// Number of distinct labels appearing anywhere in the tree.
    pub fn width(&self) -> usize {
        self.label_set().len()
    }

    /// All labels mentioned by any node, sorted.
    pub fn label_set(&self) -> Vec<Label> {
        let mut labels = HashSet::new();
        self.collect_labels(&mut labels);
        let mut out: Vec<Label> = labels.into_iter().collect();
        out.sort_unstable();
        out
    }

    fn collect_labels(&self, into: &mut HashSet<Label>) {
        match self {
            CwExpression::Intro { label, .. } => {
                into.insert(*label);
            }
            CwExpression::Union(l, r) => {
                l.collect_labels(into);
                r.collect_labels(into);
            }
            CwExpression::Relabel { from, to, child } => {
                into.insert(*from);
                into.insert(*to);
                child.collect_labels(into);
            }
            CwExpression::Join { a, b, child } => {
                into.insert(*a);
                into.insert(*b);
                child.collect_labels(into);
            }
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            CwExpression::Intro { .. } => 1,
            CwExpression::Union(l, r) => 1 + l.node_count() + r.node_count(),
            CwExpression::Relabel { child, .. } | CwExpression::Join { child, .. } => {
                1 + child.node_count()
            }
        }
    }

    /// Leaf vertex names in introduction (DFS) order.
    pub fn leaf_names(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, into: &mut Vec<String>) {
        match self {
            CwExpression::Intro { name, .. } => into.push(name.clone()),
            CwExpression::Union(l, r) => {
                l.collect_leaves(into);
                r.collect_leaves(into);
            }
            CwExpression::Relabel { child, .. } | CwExpression::Join { child, .. } => {
                child.collect_leaves(into)
            }
        }
    }
}

impl fmt::Debug for CwExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", print_expression(self))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CwError {
    DuplicateVertexName(String),
    /// Labels are positive integers.
    ZeroLabel,
    JoinSameLabel(Label),
    /// A join reconnects labels that are already adjacent; the transform
    /// requires an irredundant input tree.
    RedundantJoin { a: Label, b: Label },
    UnknownVertex(String),
    /// Two label classes met by a union are neither fully adjacent nor
    /// fully non-adjacent in the final graph, which no well-formed
    /// expression produces.
    InhomogeneousUnion { a: Label, b: Label },
}

impl fmt::Display for CwError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CwError::DuplicateVertexName(name) => write!(f, "duplicate vertex name `{name}`"),
            CwError::ZeroLabel => write!(f, "labels must be positive"),
            CwError::JoinSameLabel(l) => write!(f, "join requires two distinct labels, got {l}"),
            CwError::RedundantJoin { a, b } => {
                write!(f, "redundant join: labels {a} and {b} are already adjacent")
            }
            CwError::UnknownVertex(name) => write!(f, "`{name}` is not a leaf of the expression"),
            CwError::InhomogeneousUnion { a, b } => {
                write!(f, "label classes {a} and {b} are only partially adjacent across a union")
            }
        }
    }
}

impl std::error::Error for CwError {}

/// A graph together with a total vertex labeling and the original leaf
/// names; vertex ids follow leaf introduction order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    graph: Graph,
    names: Vec<String>,
    labels: Vec<Label>,
}

impl LabeledGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn label_of(&self, v: usize) -> Label {
        self.labels[v]
    }

    pub fn name_of(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    /// Edge set keyed by vertex names, each pair in sorted order; the
    /// label-free view used to compare expressions semantically.
    pub fn named_edges(&self) -> std::collections::BTreeSet<(String, String)> {
        self.graph
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (self.names[u].clone(), self.names[v].clone());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect()
    }
}

pub(crate) struct EvalState {
    pub names: Vec<String>,
    pub labels: Vec<Label>,
    pub edges: HashSet<(usize, usize)>,
    pub first_redundant: Option<(Label, Label)>,
}

pub(crate) fn eval_state(e: &CwExpression) -> Result<EvalState, CwError> {
    let mut st = EvalState {
        names: Vec::new(),
        labels: Vec::new(),
        edges: HashSet::new(),
        first_redundant: None,
    };
    eval_into(e, &mut st)?;
    Ok(st)
}

fn eval_into(e: &CwExpression, st: &mut EvalState) -> Result<std::ops::Range<usize>, CwError> {
    match e {
        CwExpression::Intro { label, name } => {
            if *label == 0 {
                return Err(CwError::ZeroLabel);
            }
            if st.names.iter().any(|n| n == name) {
                return Err(CwError::DuplicateVertexName(name.clone()));
            }
            st.names.push(name.clone());
            st.labels.push(*label);
            Ok(st.names.len() - 1..st.names.len())
        }
        CwExpression::Union(l, r) => {
            let rl = eval_into(l, st)?;
            let rr = eval_into(r, st)?;
            Ok(rl.start..rr.end)
        }
        CwExpression::Relabel { from, to, child } => {
            if *from == 0 || *to == 0 {
                return Err(CwError::ZeroLabel);
            }
            let range = eval_into(child, st)?;
            for v in range.clone() {
                if st.labels[v] == *from {
                    st.labels[v] = *to;
                }
            }
            Ok(range)
        }
        CwExpression::Join { a, b, child } => {
            if *a == 0 || *b == 0 {
                return Err(CwError::ZeroLabel);
            }
            if a == b {
                return Err(CwError::JoinSameLabel(*a));
            }
            let range = eval_into(child, st)?;
            for u in range.clone() {
                if st.labels[u] != *a {
                    continue;
                }
                for v in range.clone() {
                    if st.labels[v] != *b {
                        continue;
                    }
                    let pair = (u.min(v), u.max(v));
                    if !st.edges.insert(pair) && st.first_redundant.is_none() {
                        st.first_redundant = Some((*a, *b));
                    }
                }
            }
            Ok(range)
        }
    }
}

/// Evaluates the expression bottom-up into the labeled graph it denotes.
pub fn eval_expression(e: &CwExpression) -> Result<LabeledGraph, CwError> {
    let st = eval_state(e)?;
    let mut b = GraphBuilder::new(st.names.len());
    for &(u, v) in &st.edges {
        b.add_edge(u, v);
    }
    Ok(LabeledGraph { graph: b.build(), names: st.names, labels: st.labels })
}

/// True iff every join in the tree connects two label classes with no
/// pre-existing edges between them.
pub fn is_irredundant(e: &CwExpression) -> Result<bool, CwError> {
    Ok(eval_state(e)?.first_redundant.is_none())
}
