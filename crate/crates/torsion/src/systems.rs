use zlinalg::IntMatrix;

use crate::error::TorsionError;
use crate::minors::{all_minors_unimodular, MinorReport};

/// A family of induction blocks into one group, given as raw matrices that
/// share their rows (one row per basis element of the larger group).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    pub name: String,
    pub blocks: Vec<(String, IntMatrix)>,
}

impl BlockSystem {
    pub fn new(name: impl Into<String>) -> Self {
        BlockSystem {
            name: name.into(),
            blocks: Vec::new(),
        }
    }

    pub fn with(mut self, label: impl Into<String>, m: IntMatrix) -> Self {
        self.blocks.push((label.into(), m));
        self
    }

    /// The blocks side by side.
    pub fn concatenated(&self) -> Result<IntMatrix, TorsionError> {
        if self.blocks.is_empty() {
            return Err(TorsionError::EmptySystem);
        }
        let parts: Vec<IntMatrix> = self.blocks.iter().map(|(_, m)| m.clone()).collect();
        Ok(IntMatrix::hstack(&parts)?)
    }

    /// Minor check of the concatenated blocks.
    pub fn check(&self, cap: Option<usize>) -> Result<MinorReport, TorsionError> {
        Ok(all_minors_unimodular(&self.concatenated()?, cap))
    }
}

/// `C₂ ↪ C₄`, `s ↦ s²`, in the transformed bases of `C₄` (rows) and `C₂`
/// (columns).
pub fn c2_in_c4() -> IntMatrix {
    IntMatrix::from_rows(&[[1, 0], [0, 0], [0, 1], [0, 0]])
}

/// The map `R(C₂) → R(C₄)` induced by `s ↦ e`.
pub fn c2_trivially_in_c4() -> IntMatrix {
    IntMatrix::from_rows(&[[1, 0], [0, 0], [0, 0], [0, 0]])
}

/// `{1} ↪ C₄`.
pub fn trivial_in_c4() -> IntMatrix {
    IntMatrix::from_rows(&[[1], [0], [0], [0]])
}

/// The maps into a `C₄` vertex group of the Heisenberg semidirect product
/// `ℤ³ ⋊ ℤ/4`, each taken `copies` times.
pub fn heisenberg_system(copies: usize) -> BlockSystem {
    let mut sys = BlockSystem::new("heisenberg-blocks");
    for n in 1..=copies {
        sys = sys
            .with(format!("C2 -> C4 (s -> s^2) #{n}"), c2_in_c4())
            .with(format!("C2 -> C4 (s -> e) #{n}"), c2_trivially_in_c4())
            .with(format!("1 -> C4 #{n}"), trivial_in_c4());
    }
    sys
}

/// A `ℤ/p` vertex group of a crystallographic group `ℤⁿ ⋊ ℤ/p` whose
/// adjacent cells have trivial stabilizer: only the trivial representation
/// is induced, giving `edges` copies of a single unit column.
pub fn crystallographic_system(p: usize, edges: usize) -> BlockSystem {
    let column = IntMatrix::from_fn(p, 1, |i, _| if i == 0 { 1.into() } else { 0.into() });
    (1..=edges).fold(
        BlockSystem::new(format!("crystallographic-Z/{p}")),
        |sys, n| sys.with(format!("1 -> Z/{p} #{n}"), column.clone()),
    )
}
