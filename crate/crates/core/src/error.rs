use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular (rank {rank} < order {order})")]
    SingularMatrix { rank: usize, order: usize },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix must be symmetric")]
    NotSymmetric,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid pentad: {0}")]
    InvalidPentad(String),

    #[error("local Lie algebra axioms violated: {}", .0.join("; "))]
    InvalidLocal(Vec<String>),

    #[error("degree {degree} lies outside the expansion cutoff {cutoff}")]
    OutOfRange { degree: i64, cutoff: usize },

    #[error("cutoff must be at least 1")]
    ZeroCutoff,

    #[error("matrix is not symmetrizable: {0}")]
    NotSymmetrizable(String),

    #[error("border completion is not invertible")]
    CompletionFailed,

    #[error("index set is degenerate: every index has i = 0 and -1 is absent")]
    DegenerateIndexSet,

    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),

    #[error("expansion exceeded the basis size limit of {limit}")]
    DimensionLimit { limit: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
