use std::fmt;

use repring::StabilizerType;

use crate::error::InductionError;

/// Which coordinates an induction matrix is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Irreducible characters, in the order of `repring::character_table`.
    Standard,
    /// The transformed bases of `repring::base_change` (see the crate docs
    /// for how they enter on each side).
    Transformed,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Standard => "standard",
            Basis::Transformed => "transformed",
        })
    }
}

/// A special subgroup `H ⊆ G` of a stabilizer, given by the images of the
/// generators of `H`.
///
/// `generators[a]` is the generator role of `G` (0 = `s_i`, 1 = `s_j`,
/// 2 = `s_k`) that the `a`-th generator of `H` is. The order therefore
/// carries the order case: for an edge `{p, q}` of a vertex,
/// `[p, q]` with `p < q` is the case where the edge's first generator plays
/// the smaller role, `[q, p]` the reversed case.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InclusionKey {
    pub sup: StabilizerType,
    pub generators: Vec<u8>,
}

/// Coxeter exponent between two generator roles of a stabilizer type.
pub fn role_exponent(t: &StabilizerType, p: u8, q: u8) -> Option<u32> {
    let (p, q) = (p.min(q), p.max(q));
    if p == q || usize::from(q) >= t.coxeter_rank() {
        return None;
    }
    Some(match (*t, p, q) {
        (StabilizerType::Dm(m), 0, 1) => m,
        (StabilizerType::Delta22m(m), 1, 2) => m,
        (StabilizerType::Delta233, 0, 1) | (StabilizerType::Delta233, 1, 2) => 3,
        (StabilizerType::Delta234 | StabilizerType::Delta235, 0, 1) => 3,
        (StabilizerType::Delta234, 1, 2) => 4,
        (StabilizerType::Delta235, 1, 2) => 5,
        _ => 2,
    })
}

impl InclusionKey {
    /// The trivial group inside a face stabilizer.
    pub fn trivial_in_face() -> Self {
        InclusionKey {
            sup: StabilizerType::C2,
            generators: vec![],
        }
    }

    /// A face stabilizer inside the stabilizer `D_m` of one of its edges.
    /// `first` says whether the face's reflection is the edge's first
    /// generator (the face with the smaller index).
    pub fn face_in_edge(m: u32, first: bool) -> Self {
        InclusionKey {
            sup: StabilizerType::Dm(m),
            generators: vec![if first { 0 } else { 1 }],
        }
    }

    /// An edge stabilizer inside a vertex stabilizer: the edge is generated
    /// by the roles `p` and `q` of the vertex, and `ascending` says whether
    /// the edge's first generator is the one playing role `min(p, q)`.
    pub fn edge_in_vertex(sup: StabilizerType, p: u8, q: u8, ascending: bool) -> Self {
        let (lo, hi) = (p.min(q), p.max(q));
        InclusionKey {
            sup,
            generators: if ascending {
                vec![lo, hi]
            } else {
                vec![hi, lo]
            },
        }
    }

    fn inadmissible(&self) -> InductionError {
        InductionError::Inadmissible {
            sup: self.sup,
            generators: self.generators.clone(),
        }
    }

    /// The subgroup's type, or an error if the key is not one of the
    /// patterns occurring in the cell complex.
    pub fn sub(&self) -> Result<StabilizerType, InductionError> {
        self.sup.check(u32::MAX)?;
        let g = &self.generators;
        match (self.sup.coxeter_rank(), g.len()) {
            (1, 0) => Ok(StabilizerType::Trivial),
            (2, 1) if g[0] < 2 => Ok(StabilizerType::C2),
            (3, 2) => role_exponent(&self.sup, g[0], g[1])
                .map(StabilizerType::Dm)
                .ok_or_else(|| self.inadmissible()),
            _ => Err(self.inadmissible()),
        }
    }

    /// True when the subgroup's generators appear in increasing role order.
    pub fn ascending(&self) -> bool {
        self.generators.windows(2).all(|w| w[0] < w[1])
    }

    /// Index `[G : H]`.
    pub fn index(&self) -> Result<u64, InductionError> {
        Ok(self.sup.order() / self.sub()?.order())
    }
}

impl fmt::Display for InclusionKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: String = self
            .generators
            .iter()
            .map(|&g| ['i', 'j', 'k'][g as usize])
            .collect();
        match self.sub() {
            Ok(sub) => write!(f, "{sub} -> {} via <{letters}>", self.sup),
            Err(_) => write!(f, "? -> {} via <{letters}>", self.sup),
        }
    }
}
