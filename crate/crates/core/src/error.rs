use thiserror::Error;

/// Errors raised by constructors and operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("shape mismatch: (m, n) = {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("image {image} out of range for degree {degree}")]
    ImageOutOfRange { image: usize, degree: usize },

    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("indices must be distinct, got {0} twice")]
    EqualIndices(usize),

    #[error("transformation is not a permutation")]
    NotPermutation,

    #[error("transformation does not preserve the partition into {m} blocks of size {n}")]
    NotPartitionPreserving { m: usize, n: usize },

    #[error("digraph is not strongly connected")]
    NotStronglyConnected,

    #[error("strongly connected components are not totally ordered")]
    NoTotalOrder,

    #[error("{what} is too large for exhaustive enumeration (limit {limit})")]
    TooLarge { what: String, limit: usize },

    #[error("element budget of {budget} exceeded")]
    BudgetExceeded { budget: usize },

    #[error("generator lives in {found}, expected {expected}")]
    AmbientMismatch { found: String, expected: String },

    #[error("invalid generating-set specification: {0}")]
    InvalidSpec(String),

    #[error("generators do not generate the whole monoid")]
    DoesNotGenerate,

    #[error("no factorization found within {0} products")]
    FactorizationNotFound(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
