use std::fmt;

use crate::error::RepringError;

/// Largest dihedral parameter `m` accepted by default.
pub const DEFAULT_MAX_M: u32 = 64;

/// Isomorphism type of a cell stabilizer, with its Coxeter generators.
///
/// * `Trivial` — the 3-cell.
/// * `C2` — a face, generated by one reflection.
/// * `Dm(m)` — an edge with exponent `m ≥ 2`, generators `s_i, s_j`.
/// * `Delta222`, `Delta22m(m ≥ 3)`, `Delta233`, `Delta234`, `Delta235` —
///   vertices, generators `s_i, s_j, s_k` in the role conventions of the
///   `polyhedron` crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StabilizerType {
    Trivial,
    C2,
    Dm(u32),
    Delta222,
    Delta22m(u32),
    Delta233,
    Delta234,
    Delta235,
}

impl fmt::Display for StabilizerType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StabilizerType::Trivial => write!(f, "1"),
            StabilizerType::C2 => write!(f, "C2"),
            StabilizerType::Dm(m) => write!(f, "D{m}"),
            StabilizerType::Delta222 => write!(f, "Delta(2,2,2)"),
            StabilizerType::Delta22m(m) => write!(f, "Delta(2,2,{m})"),
            StabilizerType::Delta233 => write!(f, "Delta(2,3,3)"),
            StabilizerType::Delta234 => write!(f, "Delta(2,3,4)"),
            StabilizerType::Delta235 => write!(f, "Delta(2,3,5)"),
        }
    }
}

impl StabilizerType {
    /// Checks the dihedral parameter against the family's range and `max_m`.
    pub fn check(&self, max_m: u32) -> Result<(), RepringError> {
        let (family, m, min) = match *self {
            StabilizerType::Dm(m) => ("D_m", m, 2),
            StabilizerType::Delta22m(m) => ("Delta(2,2,m)", m, 3),
            _ => return Ok(()),
        };
        if m < min || m > max_m {
            return Err(RepringError::InvalidOrder {
                family,
                m,
                min,
                max: max_m,
            });
        }
        Ok(())
    }

    /// Group order.
    pub fn order(&self) -> u64 {
        match *self {
            StabilizerType::Trivial => 1,
            StabilizerType::C2 => 2,
            StabilizerType::Dm(m) => 2 * u64::from(m),
            StabilizerType::Delta222 => 8,
            StabilizerType::Delta22m(m) => 4 * u64::from(m),
            StabilizerType::Delta233 => 24,
            StabilizerType::Delta234 => 48,
            StabilizerType::Delta235 => 120,
        }
    }

    /// Number of Coxeter generators.
    pub fn coxeter_rank(&self) -> usize {
        match self {
            StabilizerType::Trivial => 0,
            StabilizerType::C2 => 1,
            StabilizerType::Dm(_) => 2,
            _ => 3,
        }
    }

    pub fn is_vertex_type(&self) -> bool {
        self.coxeter_rank() == 3
    }

    /// The canonical type of the edge stabilizer with exponent `m`.
    pub fn edge(m: u32) -> StabilizerType {
        StabilizerType::Dm(m)
    }
}

/// Number of conjugacy classes of the dihedral group of order `2m`.
pub fn dihedral_class_count(m: u32) -> usize {
    let m = m as usize;
    if m % 2 == 0 {
        m / 2 + 3
    } else {
        (m - 1) / 2 + 2
    }
}

/// Number of conjugacy classes, i.e. the rank of the representation ring.
pub fn class_count(t: &StabilizerType) -> usize {
    match *t {
        StabilizerType::Trivial => 1,
        StabilizerType::C2 => 2,
        StabilizerType::Dm(m) => dihedral_class_count(m),
        StabilizerType::Delta222 => 8,
        StabilizerType::Delta22m(m) => 2 * dihedral_class_count(m),
        StabilizerType::Delta233 => 5,
        StabilizerType::Delta234 => 10,
        StabilizerType::Delta235 => 10,
    }
}

/// Number of conjugacy classes of a vertex stabilizer that are not already
/// accounted for by its faces and edges.
pub fn unaccounted_class_count(t: &StabilizerType) -> Result<usize, RepringError> {
    match *t {
        StabilizerType::Delta222 => Ok(dihedral_class_count(2) - 3),
        StabilizerType::Delta22m(m) => Ok(dihedral_class_count(m) - 3),
        StabilizerType::Delta233 => Ok(1),
        StabilizerType::Delta234 => Ok(3),
        StabilizerType::Delta235 => Ok(5),
        other => Err(RepringError::NotVertexType(other)),
    }
}
