use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::StructureLabel;

/// One entry of a type set: an arc-regularity level, with a subtype on
/// levels 2 and 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeMember {
    One,
    TwoOne,
    TwoTwo,
    Three,
    FourOne,
    FourTwo,
    Five,
}

impl TypeMember {
    pub const ALL: [TypeMember; 7] = [
        TypeMember::One,
        TypeMember::TwoOne,
        TypeMember::TwoTwo,
        TypeMember::Three,
        TypeMember::FourOne,
        TypeMember::FourTwo,
        TypeMember::Five,
    ];

    pub fn new(level: u32, subtype: Option<u8>) -> Result<TypeMember> {
        let m = match (level, subtype) {
            (1, None) => TypeMember::One,
            (2, Some(1)) => TypeMember::TwoOne,
            (2, Some(2)) => TypeMember::TwoTwo,
            (3, None) => TypeMember::Three,
            (4, Some(1)) => TypeMember::FourOne,
            (4, Some(2)) => TypeMember::FourTwo,
            (5, None) => TypeMember::Five,
            _ => {
                return Err(Error::UnknownTypeLabel(format!(
                    "level {level} with subtype {subtype:?}"
                )))
            }
        };
        Ok(m)
    }

    pub fn level(self) -> u32 {
        match self {
            TypeMember::One => 1,
            TypeMember::TwoOne | TypeMember::TwoTwo => 2,
            TypeMember::Three => 3,
            TypeMember::FourOne | TypeMember::FourTwo => 4,
            TypeMember::Five => 5,
        }
    }

    pub fn subtype(self) -> Option<u8> {
        match self {
            TypeMember::TwoOne | TypeMember::FourOne => Some(1),
            TypeMember::TwoTwo | TypeMember::FourTwo => Some(2),
            _ => None,
        }
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }

    fn text(self) -> &'static str {
        match self {
            TypeMember::One => "1",
            TypeMember::TwoOne => "2^1",
            TypeMember::TwoTwo => "2^2",
            TypeMember::Three => "3",
            TypeMember::FourOne => "4^1",
            TypeMember::FourTwo => "4^2",
            TypeMember::Five => "5",
        }
    }
}

/// Whether graphs of a given type are bipartite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Bipartiteness {
    Always,
    Never,
    Sometimes,
}

impl Bipartiteness {
    pub fn allows(self, bipartite: bool) -> bool {
        match self {
            Bipartiteness::Always => bipartite,
            Bipartiteness::Never => !bipartite,
            Bipartiteness::Sometimes => true,
        }
    }
}

/// A set of [`TypeMember`]s, stored as a bit set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TypeLabel(u8);

/// The seventeen admissible types with their bipartiteness.
pub const ADMISSIBLE_TYPES: [(&str, Bipartiteness); 17] = [
    ("{1}", Bipartiteness::Sometimes),
    ("{1,2^1}", Bipartiteness::Sometimes),
    ("{2^1}", Bipartiteness::Sometimes),
    ("{2^2}", Bipartiteness::Sometimes),
    ("{1,2^1,2^2,3}", Bipartiteness::Always),
    ("{2^1,2^2,3}", Bipartiteness::Always),
    ("{2^1,3}", Bipartiteness::Never),
    ("{2^2,3}", Bipartiteness::Never),
    ("{3}", Bipartiteness::Sometimes),
    ("{1,4^1}", Bipartiteness::Always),
    ("{4^1}", Bipartiteness::Sometimes),
    ("{4^2}", Bipartiteness::Sometimes),
    ("{1,4^1,4^2,5}", Bipartiteness::Always),
    ("{4^1,4^2,5}", Bipartiteness::Always),
    ("{4^1,5}", Bipartiteness::Never),
    ("{4^2,5}", Bipartiteness::Never),
    ("{5}", Bipartiteness::Sometimes),
];

impl TypeLabel {
    pub fn from_members(members: impl IntoIterator<Item = TypeMember>) -> TypeLabel {
        TypeLabel(members.into_iter().fold(0, |acc, m| acc | m.bit()))
    }

    pub fn members(self) -> Vec<TypeMember> {
        TypeMember::ALL
            .into_iter()
            .filter(|m| self.0 & m.bit() != 0)
            .collect()
    }

    pub fn contains(self, m: TypeMember) -> bool {
        self.0 & m.bit() != 0
    }

    /// Largest level present; 0 for the empty set.
    pub fn level(self) -> u32 {
        self.members().last().map_or(0, |m| m.level())
    }

    /// The bipartiteness column entry, `None` if the set is not admissible.
    pub fn bipartiteness(self) -> Option<Bipartiteness> {
        let text = self.to_string();
        ADMISSIBLE_TYPES
            .iter()
            .find(|(t, _)| *t == text)
            .map(|&(_, b)| b)
    }

    pub fn is_admissible(self) -> bool {
        self.bipartiteness().is_some()
    }

    pub fn admissible() -> Vec<TypeLabel> {
        ADMISSIBLE_TYPES
            .iter()
            .map(|(t, _)| t.parse().expect("table entries parse"))
            .collect()
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.members().into_iter().map(TypeMember::text).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    /// Parses `"{1,2^1}"`; the superscript forms `2¹`, `2²` are accepted.
    fn from_str(text: &str) -> Result<TypeLabel> {
        let unknown = || Error::UnknownTypeLabel(text.to_string());
        let inner = text
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(unknown)?;
        let mut members = Vec::new();
        for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let part = part.replace('\u{b9}', "^1").replace('\u{b2}', "^2");
            let m = TypeMember::ALL
                .into_iter()
                .find(|m| m.text() == part)
                .ok_or_else(unknown)?;
            members.push(m);
        }
        Ok(TypeLabel::from_members(members))
    }
}

impl Serialize for TypeLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Vertex- and edge-stabilizer structures of a symmetric cubic graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StabilizerStructure {
    pub vertex: StructureLabel,
    pub edge: StructureLabel,
}

/// Candidate `(vertex, edge)` stabilizer structures for an `s`-regular
/// group. The setwise stabilizer of an edge has order `2^s`, so at `s = 1`
/// it is `Z2`.
pub fn stabilizer_candidates(s: u32) -> Option<(StructureLabel, &'static [StructureLabel])> {
    use StructureLabel::*;
    let row: (StructureLabel, &'static [StructureLabel]) = match s {
        1 => (Z3, &[Z2]),
        2 => (S3, &[Z2xZ2, Z4]),
        3 => (S3xZ2, &[D8]),
        4 => (S4, &[D16, QD16]),
        5 => (S4xZ2, &[D8xZ2SdZ2]),
        _ => return None,
    };
    Some(row)
}
