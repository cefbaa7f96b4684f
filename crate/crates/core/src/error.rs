use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero ideal unsupported")]
    ZeroIdeal,

    #[error("operation requires a proper ideal, got the unit ideal")]
    UnitIdeal,

    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("exponent overflow while multiplying monomials")]
    ExponentOverflow,

    #[error("degree {degree} is below the minimal generator degree {min_degree}")]
    DegreeBelowMinimum { degree: u64, min_degree: u64 },

    #[error("monomial does not lie in the ideal")]
    NotInIdeal,

    #[error(
        "cap `{cap}` exceeded: needed {needed}, limit {limit}; restrict the input or raise the cap"
    )]
    CapExceeded {
        cap: &'static str,
        needed: u64,
        limit: u64,
    },

    #[error(
        "dimension {dim} exceeds the vertex-enumeration cap {limit}; use combinatorial fast path"
    )]
    VertexDimension { dim: usize, limit: usize },

    #[error("invalid primary decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("{0} is not prime")]
    InvalidPrime(u64),

    #[error("ideal is not generated in a single degree")]
    MixedGeneratorDegrees,

    #[error("graph has no edges, cover ideal would be the unit ideal")]
    EdgelessGraph,

    #[error("graph has an isolated vertex: {0}")]
    IsolatedVertex(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("formula not guaranteed for odd exponent {n}: requires s >= {threshold}")]
    FormulaNotGuaranteed { n: u64, threshold: i64 },

    #[error(
        "no qualifying generator pair found; this contradicts the degree profile's existence claim"
    )]
    NoQualifyingPair,

    #[error("numeric range exceeded: {0}")]
    NumericRange(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
