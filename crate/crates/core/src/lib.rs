//! Partial graph complementation: given a graph `G` and a target class,
//! decide whether some vertex set `S` makes `G ⊕ S` (the complement of `G`
//! inside `S`, untouched elsewhere) a member of the class.
//!
//! The crate ships structured solvers for triangle-free classes,
//! `d`-degenerate classes, and classes described by 2×2 partition matrices;
//! a clique-width expression transform and an MSO₁ formula rewrite realizing
//! the same operation on the descriptive side; an NP-hardness reduction to
//! `r`-regular targets; and an exhaustive-subset oracle that every solver is
//! differentially tested against.

pub mod catalog;
pub mod cwd;
pub mod degenerate;
pub mod generators;
pub mod graph;
pub mod hardness;
pub mod io;
pub mod mpartition;
pub mod mso1;
pub mod oracle;
pub mod recognizers;
pub mod trianglefree;

pub use graph::{Graph, GraphBuilder, GraphError, VertexSet};
pub use oracle::{oracle_solve, ClassRecognizer};
pub use recognizers::Target;
