use thiserror::Error;

/// Errors raised by constructors, predicates and searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("size limit exceeded: {what} = {value} (max {max})")]
    SizeLimit { what: &'static str, value: u64, max: u64 },

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("rank-deficient system: rank {rank} < {unknowns} unknowns")]
    RankDeficient { rank: usize, unknowns: usize },

    #[error("inconsistent linear system")]
    Inconsistent,

    #[error("search budget exceeded after {examined} candidates")]
    BudgetExceeded { examined: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
