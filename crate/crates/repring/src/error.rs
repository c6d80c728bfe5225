use thiserror::Error;

use crate::StabilizerType;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepringError {
    #[error("{0} is not a vertex stabilizer type")]
    NotVertexType(StabilizerType),

    #[error("invalid parameter m = {m} for {family} (allowed {min}..={max})")]
    InvalidOrder {
        family: &'static str,
        m: u32,
        min: u32,
        max: u32,
    },
}
