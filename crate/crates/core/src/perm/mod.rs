//! Permutations and permutation groups.

mod fingerprint;
mod group;
mod permutation;
mod reference;

pub use fingerprint::{fingerprint, GroupFingerprint};
pub use group::{ElementIter, PermGroup, DEFAULT_ENUMERATION_BOUND};
pub use permutation::{Parity, Permutation};
pub use reference::StructureLabel;
