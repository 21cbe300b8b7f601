//! Small permutation realizations of the vertex- and edge-stabilizer
//! structures that occur in cubic arc-transitive graphs. Their fingerprints
//! are what computed stabilizers get matched against.

use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use super::fingerprint::{fingerprint, GroupFingerprint};
use super::group::PermGroup;
use super::permutation::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructureLabel {
    Trivial,
    Z2,
    Z3,
    Z2xZ2,
    Z4,
    S3,
    D8,
    S3xZ2,
    D16,
    QD16,
    S4,
    /// `(D8 x Z2) ⋊ Z2`, order 32.
    D8xZ2SdZ2,
    S4xZ2,
}

impl StructureLabel {
    pub const ALL: [StructureLabel; 13] = [
        StructureLabel::Trivial,
        StructureLabel::Z2,
        StructureLabel::Z3,
        StructureLabel::Z2xZ2,
        StructureLabel::Z4,
        StructureLabel::S3,
        StructureLabel::D8,
        StructureLabel::S3xZ2,
        StructureLabel::D16,
        StructureLabel::QD16,
        StructureLabel::S4,
        StructureLabel::D8xZ2SdZ2,
        StructureLabel::S4xZ2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StructureLabel::Trivial => "1",
            StructureLabel::Z2 => "Z2",
            StructureLabel::Z3 => "Z3",
            StructureLabel::Z2xZ2 => "Z2^2",
            StructureLabel::Z4 => "Z4",
            StructureLabel::S3 => "S3",
            StructureLabel::D8 => "D8",
            StructureLabel::S3xZ2 => "S3xZ2",
            StructureLabel::D16 => "D16",
            StructureLabel::QD16 => "QD16",
            StructureLabel::S4 => "S4",
            StructureLabel::D8xZ2SdZ2 => "(D8xZ2):Z2",
            StructureLabel::S4xZ2 => "S4xZ2",
        }
    }

    /// A faithful permutation realization of the structure.
    pub fn realization(self) -> PermGroup {
        let c = |n: usize, s: &str| Permutation::parse_cycles(n, s).expect("static cycle text");
        let gens = match self {
            StructureLabel::Trivial => vec![Permutation::identity(1)],
            StructureLabel::Z2 => vec![c(2, "(0 1)")],
            StructureLabel::Z3 => vec![c(3, "(0 1 2)")],
            StructureLabel::Z2xZ2 => vec![c(4, "(0 1)"), c(4, "(2 3)")],
            StructureLabel::Z4 => vec![c(4, "(0 1 2 3)")],
            StructureLabel::S3 => vec![c(3, "(0 1 2)"), c(3, "(0 1)")],
            // symmetries of a square
            StructureLabel::D8 => vec![c(4, "(0 1 2 3)"), c(4, "(1 3)")],
            StructureLabel::S3xZ2 => vec![c(5, "(0 1 2)"), c(5, "(0 1)"), c(5, "(3 4)")],
            // symmetries of an octagon
            StructureLabel::D16 => vec![c(8, "(0 1 2 3 4 5 6 7)"), c(8, "(1 7)(2 6)(3 5)")],
            StructureLabel::QD16 => quasi_dihedral_16(),
            StructureLabel::S4 => vec![c(4, "(0 1 2 3)"), c(4, "(0 1)")],
            StructureLabel::D8xZ2SdZ2 => holomorph_z8(),
            StructureLabel::S4xZ2 => vec![c(6, "(0 1 2 3)"), c(6, "(0 1)"), c(6, "(4 5)")],
        };
        PermGroup::new(gens).expect("reference realization")
    }

    pub fn fingerprint(self) -> &'static GroupFingerprint {
        static TABLE: OnceLock<Vec<(StructureLabel, GroupFingerprint)>> = OnceLock::new();
        let table = TABLE.get_or_init(|| {
            StructureLabel::ALL
                .iter()
                .map(|&l| (l, fingerprint(&l.realization(), 1024).expect("tiny group")))
                .collect()
        });
        &table
            .iter()
            .find(|(l, _)| *l == self)
            .expect("every label is tabulated")
            .1
    }

    /// The label among `candidates` whose fingerprint equals `fp`.
    pub fn identify(fp: &GroupFingerprint, candidates: &[StructureLabel]) -> Option<StructureLabel> {
        candidates.iter().copied().find(|l| l.fingerprint() == fp)
    }
}

impl Serialize for StructureLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl fmt::Display for StructureLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `<r, s | r^8 = s^2 = 1, srs = r^3>` acting on itself by right
/// multiplication; element `r^i s^j` is point `2i + j`.
fn quasi_dihedral_16() -> Vec<Permutation> {
    regular_metacyclic(8, 3)
}

/// `Z8 ⋊ Aut(Z8)`: the affine maps `x -> u x + c` on `Z8`, `u` odd.
fn holomorph_z8() -> Vec<Permutation> {
    let affine = |u: usize, c: usize| {
        Permutation::from_images((0..8).map(|x| (u * x + c) % 8).collect()).expect("bijection")
    };
    vec![affine(1, 1), affine(7, 0), affine(5, 0)]
}

/// Regular representation of `<r, s | r^m = s^2 = 1, s r s = r^k>`.
fn regular_metacyclic(m: usize, k: usize) -> Vec<Permutation> {
    // (r^a s^b)(r^c s^d) = r^(a + c k^b) s^(b + d)
    let mul = |(a, b): (usize, usize), (c, d): (usize, usize)| {
        let twist = if b == 1 { k } else { 1 };
        ((a + c * twist) % m, (b + d) % 2)
    };
    let index = |(a, b): (usize, usize)| 2 * a + b;
    let elements: Vec<(usize, usize)> = (0..m).flat_map(|a| [(a, 0), (a, 1)]).collect();
    [(1, 0), (0, 1)]
        .into_iter()
        .map(|g| {
            let mut images = vec![0; 2 * m];
            for &x in &elements {
                images[index(x)] = index(mul(x, g));
            }
            Permutation::from_images(images).expect("regular action")
        })
        .collect()
}
