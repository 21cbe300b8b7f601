//! Graphs and digraphs with the structural primitives used downstream.

#[allow(clippy::module_inception)]
mod graph;
pub mod io;
mod tree;

pub use graph::{Bipartition, Graph, Quotient};
pub use tree::{classify_tree_shape, TreeShape};
