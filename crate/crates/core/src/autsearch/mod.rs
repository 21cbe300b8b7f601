//! Automorphism groups and isomorphisms by individualization and
//! refinement.
//!
//! The search tree is explored along a first path to a discrete leaf. Then,
//! level by level from the bottom, every vertex of the target cell not yet
//! known to lie in the orbit of the first path's choice is tried; a subtree
//! search either produces an automorphism (a new generator) or proves the
//! vertex lies in a different orbit. Orbit sizes multiply to the group
//! order, which is checked against the Schreier–Sims order of the
//! generators.

mod partition;
mod search;

pub use partition::ColoredPartition;
pub use search::{
    are_isomorphic, automorphism_group, automorphism_search, AutomorphismSearch,
    DEFAULT_VERTEX_BOUND,
};
