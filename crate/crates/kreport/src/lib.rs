//! Equivariant K-homology of cocompact hyperbolic reflection groups in
//! dimension 3, computed two ways and cross-checked.
//!
//! For such a group `Γ` with fundamental polyhedron `P`, `K₀ ≅ ℤ^cf(Γ)` and
//! `K₁ ≅ ℤ^(cf(Γ) − χ)`, where `cf(Γ)` counts conjugacy classes of elements
//! of finite order and `χ` is the Euler characteristic of the Bredon chain
//! complex. [`compute`] evaluates both closed formulas from the combinatorics
//! of `P`, computes the Bredon homology by Smith normal form, runs the
//! vertex-block minor criterion, and records every comparison as a flag.

mod classes;
mod corpus;
mod error;
mod formulas;
mod report;

pub use classes::{edge_classes, EdgeClass, EdgeClassPartition, Merge};
pub use corpus::{corpus_entry, lanner, ra_dodecahedron, CorpusEntry, CORPUS};
pub use error::ReportError;
pub use formulas::{
    cf, cf_terms, class_count_terms, euler_char, euler_terms, isolated_class_count,
    reflection_class_count, CfTerms, ChiTerms, ClassCountTerms,
};
pub use report::{
    checked_complex, compute, report, BlockSummary, CellCounts, Computation, CriterionSummary,
    Flag, FlagStatus, HomologySummary, KReport, ReportOptions,
};
