//! Induction homomorphisms between the representation rings of adjacent
//! cell stabilizers: the trivial group into a face group `C₂`, a face group
//! into an edge group `D_m`, and an edge group into a vertex group.
//!
//! Standard-basis matrices are transcribed from closed-form tables (see the
//! `figures` module); rows are indexed by the irreducible characters of the
//! larger group and columns by those of the subgroup.
//!
//! # Transformed basis
//!
//! The transformed matrices describe the same chain maps after the
//! coordinate changes that make every block of the boundary maps have
//! entries in {−1, 0, 1}. With `B_X` the matrix of `repring::base_change`
//! for a stabilizer `X`, coordinates change as
//!
//! * vertex groups: `x ↦ B_V x`,
//! * edge and face groups: `x ↦ B⁻ᵀ x`,
//! * the trivial group: unchanged,
//!
//! so an edge-to-vertex map becomes `B_V · M · B_Eᵀ`, a face-to-edge map
//! `B_E⁻ᵀ · M · B_C₂ᵀ` and the trivial-to-face map `B_C₂⁻ᵀ · M`. These are
//! compatible: the composite of two consecutive transformed maps is the
//! transformed composite, so the transformed chain complex is isomorphic to
//! the standard one.

mod error;
mod figures;
mod key;

pub use error::InductionError;
pub use key::{role_exponent, Basis, InclusionKey};

use repring::{base_change, StabilizerType};
use zlinalg::IntMatrix;

/// An induction homomorphism `R(H) → R(G)` in a chosen basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InductionMatrix {
    pub key: InclusionKey,
    pub basis: Basis,
    /// Rows indexed by the basis of `R(G)`, columns by that of `R(H)`.
    pub matrix: IntMatrix,
}

/// Labelling variants that change the standard-basis data.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct InductionOptions {
    /// Use the other labelling of the two 3-dimensional characters of A₅
    /// (exchanging ξ₄ and ξ₅ in both halves of Δ(2,3,5)). The two choices
    /// differ by the outer automorphism of A₅ × C₂.
    pub delta235_swap: bool,
}

fn matrix(rows: &[Vec<i64>]) -> IntMatrix {
    let cols = rows.first().map_or(0, Vec::len);
    IntMatrix::from_rows_with_cols(rows, cols)
}

fn base(t: &StabilizerType) -> Result<IntMatrix, InductionError> {
    Ok(matrix(&base_change(t)?.matrix))
}

/// `B⁻ᵀ`, the coordinate change on edge and face groups.
fn dual_base(t: &StabilizerType) -> Result<IntMatrix, InductionError> {
    Ok(base(t)?.inverse_unimodular()?.transpose())
}

fn standard_rows(
    key: &InclusionKey,
    opts: InductionOptions,
) -> Result<Vec<Vec<i64>>, InductionError> {
    let sub = key.sub()?;
    let mut rows = match (key.sup, sub) {
        (StabilizerType::C2, _) => figures::trivial_to_c2(),
        (StabilizerType::Dm(m), _) => figures::c2_to_dm(m, key.generators[0] == 0),
        (sup, _) => {
            let (g0, g1) = (key.generators[0], key.generators[1]);
            figures::edge_to_vertex(sup, g0.min(g1), g0.max(g1), g0 < g1)
        }
    };
    if opts.delta235_swap && key.sup == StabilizerType::Delta235 {
        rows.swap(3, 4);
        rows.swap(8, 9);
    }
    Ok(rows)
}

fn build(
    key: &InclusionKey,
    basis: Basis,
    opts: InductionOptions,
) -> Result<InductionMatrix, InductionError> {
    let sub = key.sub()?;
    let standard = matrix(&standard_rows(key, opts)?);
    let matrix = match basis {
        Basis::Standard => standard,
        Basis::Transformed => match key.sup {
            StabilizerType::C2 => dual_base(&key.sup)?.checked_mul(&standard)?,
            StabilizerType::Dm(_) => dual_base(&key.sup)?
                .checked_mul(&standard)?
                .checked_mul(&base(&sub)?.transpose())?,
            _ => base(&key.sup)?
                .checked_mul(&standard)?
                .checked_mul(&base(&sub)?.transpose())?,
        },
    };
    Ok(InductionMatrix {
        key: key.clone(),
        basis,
        matrix,
    })
}

/// Induction for any admissible key, in either basis.
pub fn induction(key: &InclusionKey, basis: Basis) -> Result<InductionMatrix, InductionError> {
    build(key, basis, InductionOptions::default())
}

/// Induction with a labelling variant.
pub fn induction_with(
    key: &InclusionKey,
    basis: Basis,
    opts: InductionOptions,
) -> Result<InductionMatrix, InductionError> {
    build(key, basis, opts)
}

/// `R({e}) → R(C₂)`: `a ↦ (a, a)`, the regular representation.
pub fn trivial_to_c2() -> InductionMatrix {
    induction(&InclusionKey::trivial_in_face(), Basis::Standard).expect("admissible")
}

/// `R(C₂) → R(D_m)`; `first` says the face reflection is the edge's first
/// generator.
pub fn c2_to_dm(m: u32, first: bool) -> Result<InductionMatrix, InductionError> {
    induction(&InclusionKey::face_in_edge(m, first), Basis::Standard)
}

/// `R(D_m) → R(Γ_v)` in the standard basis.
pub fn edge_to_vertex(key: &InclusionKey) -> Result<InductionMatrix, InductionError> {
    require_vertex(key)?;
    induction(key, Basis::Standard)
}

/// `R(D_m) → R(Γ_v)` in the transformed basis: `B_V · M · B_Eᵀ`.
pub fn edge_to_vertex_transformed(key: &InclusionKey) -> Result<InductionMatrix, InductionError> {
    require_vertex(key)?;
    induction(key, Basis::Transformed)
}

/// `R(C₂) → R(D_m)` in the transformed basis: `B_E⁻ᵀ · M · B_C₂ᵀ`.
pub fn face_to_edge_transformed(m: u32, first: bool) -> Result<InductionMatrix, InductionError> {
    induction(&InclusionKey::face_in_edge(m, first), Basis::Transformed)
}

fn require_vertex(key: &InclusionKey) -> Result<(), InductionError> {
    if key.sup.is_vertex_type() {
        Ok(())
    } else {
        Err(InductionError::Inadmissible {
            sup: key.sup,
            generators: key.generators.clone(),
        })
    }
}

/// Every inclusion of an edge group into a vertex group of type `sup`:
/// the three role pairs in both order cases.
pub fn vertex_keys(sup: StabilizerType) -> Vec<InclusionKey> {
    let mut out = Vec::new();
    for (p, q) in [(0, 1), (0, 2), (1, 2)] {
        for ascending in [true, false] {
            out.push(InclusionKey::edge_in_vertex(sup, p, q, ascending));
        }
    }
    out
}
