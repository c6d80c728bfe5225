//! The Bredon chain complex `0 → C₃ → C₂ → C₁ → C₀ → 0` of a compact
//! hyperbolic reflection group, assembled from the cell complex of its
//! polyhedron and the induction homomorphisms between cell stabilizers.
//!
//! `C_d` is the direct sum of the representation rings of the stabilizers
//! of the `d`-cells: one trivial group, a `C₂` per face, a `D_m` per edge
//! and a triangle group per vertex. Blocks are ordered by face index and by
//! the sorted edge and vertex lists of the cell complex.
//!
//! # Signs
//!
//! * `∂₃`: every face receives the regular representation with sign +1.
//! * `∂₂`: face `f` contributes to edge `e` with the sign of its boundary
//!   traversal (`+1` along the edge orientation, `−1` against). The two
//!   faces at an edge traverse it oppositely, so `∂₂∂₃ = 0`.
//! * `∂₁`: edge `e` maps with `+` into its target vertex and `−` into its
//!   source. At every vertex a face boundary enters along one edge and
//!   leaves along another, so the two contributions cancel and `∂₁∂₂ = 0`.
//!
//! [`verify`] checks both compositions exactly instead of assuming them.

mod assemble;
mod error;

pub use assemble::{
    assemble, assemble_with, edge_inclusion, face_inclusion, verify, vertex_stabilizer,
    AssemblyOptions, Block, ChainComplex,
};
pub use error::ComplexError;
pub use induction::Basis;
