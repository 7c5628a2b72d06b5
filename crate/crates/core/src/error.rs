use thiserror::Error;

/// Errors raised by the workbench. Check failures are verdicts, not errors;
/// these variants cover malformed input and violated preconditions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// Indices are 0-based; the message numbers summands from 1.
    #[error(
        "hypothesis violated: I - c_i c_p^-1 is singular for summand i = {} with pivot p = {}",
        .index + 1,
        .pivot + 1
    )]
    HypothesisViolation { pivot: usize, index: usize },

    #[error("input does not satisfy the membership precondition: {0}")]
    MembershipPrecondition(String),

    #[error("span of R(y) at sample {sample} is not translation invariant")]
    NotTranslationInvariant { sample: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("variable x{index} exceeds the pinned dimension {dim}")]
    DimensionExceeded { index: usize, dim: usize },

    #[error("non-finite value at sample {0}")]
    NonFiniteValue(usize),

    #[error("least-squares system is ill-conditioned (condition estimate {0:e})")]
    IllConditioned(f64),

    #[error("{points} sample points cannot determine {coefficients} coefficients")]
    Underdetermined { points: usize, coefficients: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
