use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} outside of [1, {n}]")]
    VertexOutOfRange { vertex: u32, n: usize },

    #[error("invalid edge {edge:?}: {reason}")]
    InvalidEdge { edge: Vec<u32>, reason: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("set system is not intersecting")]
    NotIntersecting,

    #[error("set system is not intersecting after deleting the last ground element")]
    NotIntersectingAfterDeletion,

    #[error("invalid probability distribution: {0}")]
    InvalidDistribution(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("node budget of {budget} exhausted")]
    BudgetExhausted { budget: u64 },

    #[error("invalid orbit partition: {0}")]
    InvalidOrbits(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
