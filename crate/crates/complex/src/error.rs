use induction::InductionError;
use repring::RepringError;
use thiserror::Error;
use zlinalg::LinalgError;

#[derive(Debug, Error)]
pub enum ComplexError {
    #[error("edge {edge} has exponent {m}, above the configured maximum {max}")]
    ExponentTooLarge { edge: String, m: u32, max: u32 },
    #[error("no induction pattern for {cell}: {source}")]
    MissingInduction {
        cell: String,
        #[source]
        source: InductionError,
    },
    #[error(transparent)]
    Repring(#[from] RepringError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("cannot write matrix dump: {0}")]
    Io(#[from] std::io::Error),
}
