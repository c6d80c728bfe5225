use repring::{RepringError, StabilizerType};
use thiserror::Error;
use zlinalg::LinalgError;

#[derive(Debug, Error)]
pub enum InductionError {
    #[error("no induction pattern for generators {generators:?} of {sup}")]
    Inadmissible {
        sup: StabilizerType,
        generators: Vec<u8>,
    },
    #[error(transparent)]
    Repring(#[from] RepringError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
