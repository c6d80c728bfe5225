//! Combinatorics of compact Coxeter polyhedra in hyperbolic 3-space.
//!
//! The only input is the [`CoxeterMatrix`]. From it [`build_complex`]
//! derives the quotient cell complex of the polyhedron: faces, the edges
//! between faces with finite exponent, the vertices (spherical triples), the
//! cyclic boundary of every face and a consistent orientation of the boundary
//! sphere. [`validate`] re-checks every invariant of a [`CellComplex`] and
//! reports each violation.

mod cells;
mod coxeter;
mod error;
mod validate;

pub use cells::{
    build_complex, BoundaryStep, CellComplex, Edge, Face, Vertex, VertexKind, VertexType,
};
pub use coxeter::{is_spherical, CoxeterMatrix};
pub use error::PolyhedronError;
pub use validate::{validate, Diagnostic};
