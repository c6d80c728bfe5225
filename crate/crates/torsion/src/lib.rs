//! The vertex-block criterion for torsion-freeness of `H₀`.
//!
//! In the transformed basis every row of `∂₁` belongs to one vertex and is
//! zero outside the columns of the three edges at that vertex. If every
//! such vertex block has all its minors in {−1, 0, 1}, then so do the
//! relevant maximal minors of `∂₁`, its elementary divisors are all 1, and
//! `H₀ = coker ∂₁` is free.
//!
//! The crate cuts the blocks out of an assembled chain complex
//! ([`build_vertex_blocks`]), shrinks them with [`reduce`], and enumerates
//! minors with [`all_minors_unimodular`]. [`BlockSystem`] runs the same
//! check on hand-supplied blocks, for groups that are not reflection groups.

mod blocks;
mod error;
mod minors;
mod systems;

pub use blocks::{build_vertex_blocks, check_block, criterion, BlockVerdict, Verdict, VertexBlock};
pub use error::TorsionError;
pub use minors::{all_minors_unimodular, reduce, reduce_tracked, MinorReport, Reduction, Witness};
pub use systems::{
    c2_in_c4, c2_trivially_in_c4, crystallographic_system, heisenberg_system, trivial_in_c4,
    BlockSystem,
};
