//! Arc-regularity level, stabilizer structures and type of a cubic
//! symmetric graph.
//!
//! The type is found by a sweep over pairs `(H, a)`. Fix the arc `(u, v)`
//! with `u = 0`. `H` runs over the subgroups of `Aut(X)_u` (at most 48
//! elements, so every subgroup is reached by closing generating sets one
//! element at a time) of order `3 * 2^(s'-1)` that are transitive on
//! `N(u)`. `a` runs over the automorphisms with `a(u) = v` and `a(v) = u`.
//! A candidate `K = <H, a>` is kept when `|K| = 3 * 2^(s'-1) * |V|` and `K`
//! is vertex-transitive; then `K_u = H` and `K` is `s'`-regular.
//!
//! Completeness: let `K` be any `s'`-regular subgroup. Then `K_u` is one of
//! the `H`, and `K` contains some `a` swapping `u` and `v`. The group
//! `<K_u, a>` moves `u` to every neighbor of `u` and, since it contains
//! `a K_u a^-1 = K_v`, to every neighbor of `v`; by connectivity it is
//! vertex-transitive with stabilizer containing `K_u`, so it has order at
//! least `|K|` and equals `K`.
//!
//! On levels 2 and 4 the subtype is 1 exactly when `K` contains an
//! involution reversing an edge. By arc-transitivity it is enough to look at
//! the elements swapping `u` and `v`, which are `h a` for `h` in `K_u`
//! fixing `v`.

mod analysis;
mod label;

pub use analysis::{
    arc_regularity_level, base_arc, check_symmetric, find_regular_subgroups,
    girth_type_violation, stabilizer_structures, type_label, RegularSubgroupRecord, TypeAnalysis,
};
pub use label::{
    stabilizer_candidates, Bipartiteness, StabilizerStructure, TypeLabel, TypeMember,
    ADMISSIBLE_TYPES,
};
