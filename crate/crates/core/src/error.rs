use thiserror::Error;

/// Errors raised by the library.
///
/// Variants marked "internal" signal a violated mathematical invariant and
/// should never be observed on valid input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown or unsupported type label `{0}`")]
    UnknownType(String),

    #[error("dimension mismatch: expected {expected} entries, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("coweight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("difference {0:?} is not in the coroot lattice")]
    NotInCorootLattice(Vec<i64>),

    #[error("lambda {lambda:?} is not below mu {mu:?} in the dominance order")]
    NotBelow { lambda: Vec<i64>, mu: Vec<i64> },

    #[error("({mu:?}, {lambda:?}) is not a minimal degeneration")]
    NotACover { mu: Vec<i64>, lambda: Vec<i64> },

    #[error("invalid diagram automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("type {0} is not simply laced")]
    NotSimplyLaced(String),

    #[error("index {index} out of range (len {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("level {0} is not in the level set of this root")]
    LevelNotInRange(String),

    #[error("k = {k} outside 1..={max}")]
    KOutOfRange { k: i64, max: i64 },

    #[error("vertex is not absolutely special; certificates are only defined there")]
    NotAbsolutelySpecial,

    #[error("argument out of documented bounds: {0}")]
    OutOfBounds(String),

    #[error("internal: non-integral value where an integer was required ({0})")]
    NonIntegral(String),

    #[error("internal: k search exceeded its cap {cap}")]
    CapExceeded { cap: i64 },

    #[error("internal: no minimal degeneration case matches ({0})")]
    Unclassified(String),

    #[error("internal: structure constants inconsistent ({0})")]
    Inconsistent(String),

    #[error("internal: adjoint exponential did not terminate")]
    NonNilpotent,

    #[error("internal: Cartan component vanishes ({0})")]
    ZeroCartan(String),
}

pub type Result<T> = std::result::Result<T, Error>;
