use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("empty generator set")]
    NoGenerators,

    #[error("identity permutation is not a valid input here")]
    IdentityInput,

    #[error("group order overflows 128 bits")]
    OrderOverflow,

    #[error("enumeration bound exceeded: group has {order} elements, bound is {bound}")]
    BoundExceeded { order: u128, bound: u128 },

    #[error("graph has {n} vertices, automorphism search bound is {bound}")]
    TooManyVertices { n: usize, bound: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is not cubic")]
    NotCubic,

    #[error("graph is not vertex-transitive")]
    NotVertexTransitive,

    #[error("graph is vertex-transitive but not arc-transitive")]
    NotArcTransitive,

    #[error("automorphism group order {order} is not 3*2^(s-1)*{n} for any s in 1..=5")]
    NotSymmetric { order: u128, n: usize },

    #[error("stabilizer structure matches no admissible row: {0}")]
    UnknownStabilizer(String),

    #[error("computed type set {0} is not an admissible type")]
    InadmissibleType(String),

    #[error("unknown type label: {0}")]
    UnknownTypeLabel(String),

    #[error("permutation is not an automorphism of the graph")]
    NotAutomorphism,

    #[error("automorphism has no fixed vertices")]
    EmptyFixedSet,

    #[error("anchor does not match arc-regularity level {s}: {reason}")]
    AnchorMismatch { s: u32, reason: String },

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("group is not transitive")]
    Intransitive,

    #[error("diagonal orbital has no orbital graph")]
    DiagonalOrbital,

    #[error("precondition unmet: {0}")]
    Precondition(String),

    #[error("unknown graph name: {0}")]
    UnknownName(String),

    #[error("census data for {0} is not available")]
    DataMissing(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors caused by a configured resource bound.
    pub fn is_resource_bound(&self) -> bool {
        matches!(
            self,
            Error::BoundExceeded { .. } | Error::TooManyVertices { .. } | Error::OrderOverflow
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
