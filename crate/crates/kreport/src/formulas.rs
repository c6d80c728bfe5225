use polyhedron::{CellComplex, VertexKind};
use repring::{class_count, dihedral_class_count, unaccounted_class_count, RepringError};
use serde::Serialize;

use complex::vertex_stabilizer;

use crate::classes::EdgeClassPartition;

/// `cf(Γ) = 1 + |faces| + Σ_[e] (c(Γ_e) − 3) + Σ_v c̄(Γ_v)`, term by term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CfTerms {
    pub identity: i64,
    pub faces: i64,
    pub edge_classes: i64,
    pub vertices: i64,
}

impl CfTerms {
    pub fn total(&self) -> i64 {
        self.identity + self.faces + self.edge_classes + self.vertices
    }
}

/// `χ = −1 + 2|faces| − Σ_e c(Γ_e) + Σ_v c(Γ_v)`, term by term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChiTerms {
    pub cell3: i64,
    pub faces: i64,
    pub edges: i64,
    pub vertices: i64,
}

impl ChiTerms {
    pub fn total(&self) -> i64 {
        self.cell3 + self.faces + self.edges + self.vertices
    }
}

/// Number of conjugacy classes of finite-order elements of the group.
pub fn cf(cc: &CellComplex, classes: &EdgeClassPartition) -> Result<i64, RepringError> {
    cf_terms(cc, classes).map(|t| t.total())
}

pub fn cf_terms(cc: &CellComplex, classes: &EdgeClassPartition) -> Result<CfTerms, RepringError> {
    let edge_classes = classes
        .classes
        .iter()
        .map(|c| dihedral_class_count(c.m) as i64 - 3)
        .sum();
    let mut vertices = 0;
    for v in &cc.vertices {
        vertices += unaccounted_class_count(&vertex_stabilizer(&v.vtype))? as i64;
    }
    Ok(CfTerms {
        identity: 1,
        faces: cc.faces.len() as i64,
        edge_classes,
        vertices,
    })
}

/// Euler characteristic of the Bredon chain complex.
pub fn euler_char(cc: &CellComplex) -> i64 {
    euler_terms(cc).total()
}

pub fn euler_terms(cc: &CellComplex) -> ChiTerms {
    ChiTerms {
        cell3: -1,
        faces: 2 * cc.faces.len() as i64,
        edges: -cc
            .edges
            .iter()
            .map(|e| dihedral_class_count(e.m) as i64)
            .sum::<i64>(),
        vertices: cc
            .vertices
            .iter()
            .map(|v| class_count(&vertex_stabilizer(&v.vtype)) as i64)
            .sum(),
    }
}

/// `cf` recounted class by class: the identity, the reflection classes
/// (faces joined through odd exponents), the nontrivial rotation classes of
/// each edge class, and the classes of each vertex group fixing no line of
/// the reflection representation (they fix only the vertex itself).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassCountTerms {
    pub identity: i64,
    pub reflections: i64,
    pub rotations: i64,
    pub vertices: i64,
}

impl ClassCountTerms {
    pub fn total(&self) -> i64 {
        self.identity + self.reflections + self.rotations + self.vertices
    }
}

/// Conjugacy classes of a vertex group with no eigenvalue 1 in its
/// three-dimensional reflection representation.
pub fn isolated_class_count(kind: VertexKind) -> usize {
    match kind {
        VertexKind::Delta222 => 1,
        VertexKind::Delta22m(m) => (m / 2) as usize,
        VertexKind::Delta233 => 1,
        VertexKind::Delta234 => 3,
        VertexKind::Delta235 => 4,
    }
}

/// Number of classes of reflections: faces are joined whenever their
/// exponent is odd, since the two reflections are then conjugate.
pub fn reflection_class_count(cc: &CellComplex) -> usize {
    let n = cc.faces.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for e in cc.edges.iter().filter(|e| e.m % 2 == 1) {
        let (a, b) = (
            find(&mut parent, e.faces.0 - 1),
            find(&mut parent, e.faces.1 - 1),
        );
        parent[a] = b;
    }
    (0..n).filter(|&x| find(&mut parent, x) == x).count()
}

/// The class count of `cf` assembled from the finite subgroups directly,
/// rather than through the closed formula of [`cf_terms`].
pub fn class_count_terms(cc: &CellComplex, classes: &EdgeClassPartition) -> ClassCountTerms {
    ClassCountTerms {
        identity: 1,
        reflections: reflection_class_count(cc) as i64,
        rotations: classes.classes.iter().map(|c| i64::from(c.m / 2)).sum(),
        vertices: cc
            .vertices
            .iter()
            .map(|v| isolated_class_count(v.vtype.kind) as i64)
            .sum(),
    }
}
