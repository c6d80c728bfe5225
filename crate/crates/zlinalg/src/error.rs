use thiserror::Error;

/// Failures reported by the linear-algebra routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {context} ({left} vs {right})")]
    DimensionMismatch {
        context: &'static str,
        left: usize,
        right: usize,
    },

    #[error("composition of boundary maps is not zero (first nonzero entry at ({row}, {col}))")]
    NonzeroComposition { row: usize, col: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not unimodular")]
    NotUnimodular,

    #[error("internal verification failed: {0}")]
    Verification(&'static str),

    #[error("triplet format error at line {line}: {message}")]
    Triplet { line: usize, message: String },
}
