use complex::ComplexError;
use polyhedron::{Diagnostic, PolyhedronError};
use repring::RepringError;
use thiserror::Error;
use torsion::TorsionError;
use zlinalg::LinalgError;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Polyhedron(#[from] PolyhedronError),
    #[error("cell complex rejected:\n{}", list(.0))]
    Invalid(Vec<Diagnostic>),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Repring(#[from] RepringError),
    #[error(transparent)]
    Torsion(#[from] TorsionError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn list(diags: &[Diagnostic]) -> String {
    diags
        .iter()
        .map(|d| format!("  {d}"))
        .collect::<Vec<_>>()
        .join("\n")
}
