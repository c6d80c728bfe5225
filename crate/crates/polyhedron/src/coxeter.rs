use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::PolyhedronError;

/// Symmetric matrix of Coxeter exponents of a polyhedron with `n` faces.
///
/// Faces are numbered `1..=n`. Only finite exponents are stored, keyed by the
/// ordered pair `(i, j)` with `i < j`; an absent pair means the two faces are
/// disjoint (exponent ∞).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterMatrix {
    name: String,
    n: usize,
    entries: BTreeMap<(usize, usize), u32>,
}

/// On-disk document shape.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoxeterDocument {
    name: String,
    faces: usize,
    coxeter: Vec<(usize, usize, u32)>,
}

impl CoxeterMatrix {
    /// Builds and validates a matrix from `(i, j, m_ij)` triples.
    pub fn new(
        name: impl Into<String>,
        n: usize,
        triples: impl IntoIterator<Item = (usize, usize, u32)>,
    ) -> Result<Self, PolyhedronError> {
        if n < 4 {
            return Err(PolyhedronError::TooFewFaces(n));
        }
        let mut entries = BTreeMap::new();
        for (i, j, m) in triples {
            if i == j {
                return Err(PolyhedronError::DiagonalEntry(i));
            }
            let key = (i.min(j), i.max(j));
            if key.0 == 0 || key.1 > n {
                let face = if key.0 == 0 { 0 } else { key.1 };
                return Err(PolyhedronError::FaceOutOfRange { face, n });
            }
            if m < 2 {
                return Err(PolyhedronError::ExponentTooSmall {
                    i: key.0,
                    j: key.1,
                    m,
                });
            }
            if let Some(&old) = entries.get(&key) {
                if old != m {
                    return Err(PolyhedronError::ConflictingEntry {
                        i: key.0,
                        j: key.1,
                        first: old,
                        second: m,
                    });
                }
            }
            entries.insert(key, m);
        }
        Ok(CoxeterMatrix {
            name: name.into(),
            n,
            entries,
        })
    }

    /// Parses the JSON document `{"name", "faces", "coxeter": [[i, j, m], …]}`.
    pub fn parse(text: &str) -> Result<Self, PolyhedronError> {
        let doc: CoxeterDocument = serde_json::from_str(text)?;
        Self::new(doc.name, doc.faces, doc.coxeter)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of faces.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The exponent `m_ij`, or `None` for disjoint faces (`m_ij = ∞`).
    pub fn m(&self, i: usize, j: usize) -> Option<u32> {
        self.entries.get(&(i.min(j), i.max(j))).copied()
    }

    /// Finite entries as `((i, j), m)` with `i < j`, in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.entries.iter().map(|(&k, &m)| (k, m))
    }

    fn triples(&self) -> Vec<(usize, usize, u32)> {
        self.entries.iter().map(|(&(i, j), &m)| (i, j, m)).collect()
    }

    /// Serialises back to the input document format.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serialises")
    }
}

impl Serialize for CoxeterMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CoxeterMatrix", 3)?;
        s.serialize_field("name", &self.name)?;
        s.serialize_field("faces", &self.n)?;
        s.serialize_field("coxeter", &self.triples())?;
        s.end()
    }
}

/// True iff `1/p + 1/q + 1/r > 1`, i.e. the triangle group is finite.
pub fn is_spherical(p: u32, q: u32, r: u32) -> bool {
    let (p, q, r) = (u64::from(p), u64::from(q), u64::from(r));
    q * r + p * r + p * q > p * q * r
}
