use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a permutation of 1..{len}: {values:?}")]
    NotAPermutation { values: Vec<u32>, len: usize },

    #[error("sequence has repeated entry {0}")]
    RepeatedEntry(i64),

    #[error("position {position} out of range 1..={len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("length must be at least 1")]
    EmptyLength,

    #[error("length {len} exceeds the enumeration budget of {limit}")]
    BudgetExceeded { len: usize, limit: usize },

    #[error("length {len} has the wrong parity for family {family}")]
    ParityMismatch { family: String, len: usize },

    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid pattern {input:?}: {reason}")]
    PatternSyntax { input: String, reason: String },

    #[error("invalid polynomial coefficient {0:?}")]
    CoefficientSyntax(String),
}
