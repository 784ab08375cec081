//! One error type shared by every module of the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across validation, separation, reduction,
/// oracle, and parsing code paths.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("weight at column {index} is negative")]
    NonPositiveWeight { index: usize },

    #[error("capacity must be at least 1")]
    NonPositiveCapacity,

    #[error("index {index} out of range for {len} columns")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("set contains a repeated index: {index}")]
    DuplicateIndex { index: usize },

    #[error("coordinate {index} of the point lies outside [0, 1]")]
    PointOutOfBounds { index: usize },

    #[error("point violates row {row} of the instance")]
    InfeasiblePoint { row: usize },

    #[error("k = {k} outside the valid range {lo}..={hi}")]
    KOutOfRange { k: usize, lo: usize, hi: usize },

    #[error("configuration shape violated: {0}")]
    BadConfigShape(String),

    #[error("subset is not a pack")]
    NotAPack,

    #[error("subset is not a cover")]
    NotACover,

    #[error("certificate fails predicate: {0}")]
    InvalidCertificate(String),

    #[error("sparse budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("no such family/method combination: {0}")]
    UnknownFamilyMethod(String),

    #[error("input too large for this routine: {0}")]
    TooLarge(String),

    #[error("knapsack polytope is not full-dimensional: weight at column {index} exceeds the capacity")]
    NotFullDimensional { index: usize },

    #[error("cut is tight at every feasible 0-1 point; it bounds no proper face")]
    ImproperCut,

    #[error("invalid subset-sum data: {0}")]
    InvalidSsp(String),

    #[error("total weight is divisible by the capacity")]
    DivisibleTotal,

    #[error("parse error: {0}")]
    ParseError(String),

    #[error("schema violation: {0}")]
    SchemaViolation(String),
}
