//! Exact integer linear algebra over arbitrary-precision integers.
//!
//! The central type is [`IntMatrix`], a dense matrix of [`BigInt`] entries.
//! On top of it the crate provides
//!
//! * [`smith_normal_form`] with unimodular transforms, re-verified exactly,
//! * [`elementary_divisors`] (the diagonal only, no transforms tracked),
//! * [`hermite_normal_form`] (row style) for lattice comparisons,
//! * [`homology`] of a pair of composable boundary maps,
//! * a plain-text sparse triplet format for exchanging matrices.
//!
//! Nothing in this crate ever overflows: every intermediate value is a
//! `BigInt`.

mod error;
mod hnf;
mod homology;
mod matrix;
mod snf;
mod triplet;

pub use error::LinalgError;
pub use hnf::{column_hermite_normal_form, hermite_normal_form};
pub use homology::{homology, HomologyGroup};
pub use matrix::IntMatrix;
pub use num_bigint::BigInt;
pub use snf::{elementary_divisors, smith_normal_form, Snf};
pub use triplet::{read_triplets, write_triplets};
