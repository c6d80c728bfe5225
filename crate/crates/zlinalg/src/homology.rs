use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::LinalgError;
use crate::matrix::IntMatrix;
use crate::snf::{elementary_divisors, Elimination};

/// A finitely generated abelian group `ℤ^rank ⊕ ⊕ ℤ/d_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologyGroup {
    pub rank: usize,
    /// Invariant factors `d₁ | d₂ | …`, each greater than one.
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Homology `ker d_k / im d_{k+1}` of the composable pair
/// `C_{k+1} --d_{k+1}--> C_k --d_k--> C_{k-1}`.
///
/// `d_k` is `dim C_{k-1} × dim C_k` (it may have zero rows) and `d_{k+1}` is
/// `dim C_k × dim C_{k+1}` (it may have zero columns). The torsion is read off
/// the Smith normal form of `d_{k+1}` rewritten in a kernel basis of `d_k`.
pub fn homology(d_k: &IntMatrix, d_k1: &IntMatrix) -> Result<HomologyGroup, LinalgError> {
    if d_k.cols() != d_k1.rows() {
        return Err(LinalgError::DimensionMismatch {
            context: "homology: d_k columns vs d_{k+1} rows",
            left: d_k.cols(),
            right: d_k1.rows(),
        });
    }
    let composite = d_k.checked_mul(d_k1)?;
    if let Some((row, col)) = composite.first_nonzero() {
        return Err(LinalgError::NonzeroComposition { row, col });
    }
    let n = d_k.cols();

    let mut e = Elimination::new(d_k, true, true);
    let rank_k = e.run();
    let (u, s, v, v_inv) = (e.u_matrix(), e.s_matrix(), e.v_matrix(), e.v_inv_matrix());
    if &(&u * d_k) * &v != s {
        return Err(LinalgError::Verification("U·d_k·V differs from S"));
    }
    if &v * &v_inv != IntMatrix::identity(n) {
        return Err(LinalgError::Verification("V·V⁻¹ is not the identity"));
    }

    // The last n - rank_k columns of V are a basis of ker d_k; V⁻¹·d_{k+1}
    // expresses im d_{k+1} in the basis given by all columns of V, and the
    // coordinates along the first rank_k columns must vanish.
    let coords = &v_inv * d_k1;
    if coords.row_range(0, rank_k).first_nonzero().is_some() {
        return Err(LinalgError::Verification(
            "image not contained in the kernel",
        ));
    }
    let w = coords.row_range(rank_k, n);
    let divisors = elementary_divisors(&w);
    let one = BigInt::one();
    Ok(HomologyGroup {
        rank: (n - rank_k) - divisors.len(),
        torsion: divisors
            .into_iter()
            .filter(|d| *d != one && !d.is_zero())
            .collect(),
    })
}
