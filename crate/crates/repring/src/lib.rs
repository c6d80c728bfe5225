//! Representation-ring data for the finite stabilizers that occur in the cell
//! complex of a compact 3-dimensional hyperbolic reflection group.
//!
//! For each [`StabilizerType`] the crate provides the number of conjugacy
//! classes (the rank of the representation ring), a character table whose
//! columns are labelled by explicit words in the Coxeter generators, and the
//! unimodular change to the "transformed" basis in which all induction maps
//! between adjacent cell stabilizers have entries in {−1, 0, 1}.
//!
//! Character values are floating point and only meant as a test oracle; all
//! other data is exact.

mod basechange;
mod error;
mod stabilizer;
mod tables;

pub use basechange::{base_change, BaseChange};
pub use error::RepringError;
pub use stabilizer::{
    class_count, dihedral_class_count, unaccounted_class_count, StabilizerType, DEFAULT_MAX_M,
};
pub use tables::{
    character_table, character_table_with, irreducible_labels, CharacterTable, ClassRep,
    TableOptions,
};
