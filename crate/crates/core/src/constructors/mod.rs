//! Graph constructions: LCF codes, generalized Petersen graphs, Cayley
//! graphs, a registry of named cubic symmetric graphs, and corpus loading.

mod corpus;
mod families;
mod lcf;
mod named;

pub use corpus::{load_corpus, read_graph_file, Corpus};
pub use families::{
    cayley_abelian, cayley_cyclic, cayley_dihedral, cayley_permutation_group,
    generalized_petersen, CayleyGraph,
};
pub use lcf::{lcf, LcfCode};
pub use named::{
    builtin_names, canonical_id, census_names, default_census_dir, named, named_in,
};
