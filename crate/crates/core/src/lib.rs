//! Odd automorphisms of cubic symmetric graphs.
//!
//! The crate computes full automorphism groups of small graphs, classifies
//! cubic arc-transitive graphs by their arc-regularity level and the
//! arc-transitive subgroups they admit, and decides whether the graph has an
//! automorphism acting as an odd permutation of its vertices. It answers the
//! last question twice: by inspecting the group directly, and by a rule
//! table keyed on the type, the parity of half the order and bipartiteness.
//! The two answers are compared.

pub mod autsearch;
pub mod constructors;
pub mod error;
pub mod graph;
pub mod oddness;
pub mod orbital;
pub mod perm;
pub mod rigid;
pub mod symclass;

pub use error::{Error, Result};
pub use graph::{Graph, TreeShape};
pub use perm::{Parity, PermGroup, Permutation};
