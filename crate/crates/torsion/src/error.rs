use complex::Basis;
use thiserror::Error;
use zlinalg::LinalgError;

#[derive(Debug, Error)]
pub enum TorsionError {
    #[error("vertex blocks are defined in the transformed basis, got the {0} basis")]
    WrongBasis(Basis),
    #[error("vertex {vertex} meets {found} edge blocks in the boundary map, expected 3")]
    IncidentEdges { vertex: String, found: usize },
    #[error("block system is empty")]
    EmptySystem,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
