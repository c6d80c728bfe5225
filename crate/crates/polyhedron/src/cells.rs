use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::coxeter::{is_spherical, CoxeterMatrix};
use crate::error::PolyhedronError;
use crate::validate::validate;

/// Isomorphism type of a vertex stabilizer, a finite triangle group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VertexKind {
    /// Δ(2,2,2) ≅ (C₂)³.
    Delta222,
    /// Δ(2,2,m) ≅ C₂ × D_m for m ≥ 3.
    Delta22m(u32),
    /// Δ(2,3,3) ≅ S₄.
    Delta233,
    /// Δ(2,3,4) ≅ S₄ × C₂.
    Delta234,
    /// Δ(2,3,5) ≅ A₅ × C₂.
    Delta235,
}

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexKind::Delta222 => write!(f, "Delta(2,2,2)"),
            VertexKind::Delta22m(m) => write!(f, "Delta(2,2,{m})"),
            VertexKind::Delta233 => write!(f, "Delta(2,3,3)"),
            VertexKind::Delta234 => write!(f, "Delta(2,3,4)"),
            VertexKind::Delta235 => write!(f, "Delta(2,3,5)"),
        }
    }
}

/// Vertex stabilizer type together with the assignment of the three faces
/// through the vertex to the generator roles `i`, `j`, `k`.
///
/// Role conventions (`roles = [i, j, k]`, face numbers):
/// * Δ(2,2,2): `i < j < k`.
/// * Δ(2,2,m): `i` is the face meeting both others at angle π/2, `j < k`.
/// * Δ(2,3,3): `j` is the face with exponent 3 to both others, `i < k`.
/// * Δ(2,3,4), Δ(2,3,5): `j` is the middle face, `m_ij = 3`, `m_jk ∈ {4, 5}`,
///   `m_ik = 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct VertexType {
    pub kind: VertexKind,
    pub roles: [usize; 3],
}

impl VertexType {
    /// Classifies the triple of distinct faces `(a, b, c)` given the three
    /// exponents; `None` unless all are finite and the group is spherical.
    pub fn classify(cm: &CoxeterMatrix, a: usize, b: usize, c: usize) -> Option<VertexType> {
        let mut f = [a, b, c];
        f.sort_unstable();
        let [a, b, c] = f;
        let (mab, mac, mbc) = (cm.m(a, b)?, cm.m(a, c)?, cm.m(b, c)?);
        if !is_spherical(mab, mac, mbc) {
            return None;
        }
        // For each face, the exponent of the opposite pair.
        let opposite = [(a, mbc), (b, mac), (c, mab)];
        let m_of = |x: usize, y: usize| cm.m(x, y).expect("finite");
        let mut ms = [mab, mac, mbc];
        ms.sort_unstable();
        let t = match ms {
            [2, 2, 2] => VertexType {
                kind: VertexKind::Delta222,
                roles: [a, b, c],
            },
            [2, 2, m] => {
                let (i, _) = *opposite.iter().find(|&&(_, op)| op == m).expect("m-pair");
                let mut rest: Vec<usize> = f.iter().copied().filter(|&x| x != i).collect();
                rest.sort_unstable();
                VertexType {
                    kind: VertexKind::Delta22m(m),
                    roles: [i, rest[0], rest[1]],
                }
            }
            [2, 3, 3] => {
                let (j, _) = *opposite.iter().find(|&&(_, op)| op == 2).expect("2-pair");
                let mut rest: Vec<usize> = f.iter().copied().filter(|&x| x != j).collect();
                rest.sort_unstable();
                VertexType {
                    kind: VertexKind::Delta233,
                    roles: [rest[0], j, rest[1]],
                }
            }
            [2, 3, r @ (4 | 5)] => {
                let (j, _) = *opposite.iter().find(|&&(_, op)| op == 2).expect("2-pair");
                let i = *f
                    .iter()
                    .find(|&&x| x != j && m_of(x, j) == 3)
                    .expect("3-pair");
                let k = *f
                    .iter()
                    .find(|&&x| x != j && m_of(x, j) == r)
                    .expect("r-pair");
                VertexType {
                    kind: if r == 4 {
                        VertexKind::Delta234
                    } else {
                        VertexKind::Delta235
                    },
                    roles: [i, j, k],
                }
            }
            _ => return None,
        };
        Some(t)
    }

    /// The role (0 = i, 1 = j, 2 = k) played by `face`, if it is one of the
    /// vertex's faces.
    pub fn role_of(&self, face: usize) -> Option<usize> {
        self.roles.iter().position(|&r| r == face)
    }
}

/// An edge orbit: the intersection of faces `i < j` with finite `m_ij`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub faces: (usize, usize),
    pub m: u32,
    /// Endpoint vertex ids, sorted by vertex triple. For a valid complex there
    /// are exactly two; the first is the source and the second the target of
    /// the edge orientation.
    pub endpoints: Vec<usize>,
}

impl Edge {
    pub fn source(&self) -> usize {
        self.endpoints[0]
    }

    pub fn target(&self) -> usize {
        self.endpoints[1]
    }

    pub fn contains(&self, face: usize) -> bool {
        self.faces.0 == face || self.faces.1 == face
    }

    /// The face of the edge other than `face`.
    pub fn other_face(&self, face: usize) -> usize {
        if self.faces.0 == face {
            self.faces.1
        } else {
            self.faces.0
        }
    }

    pub fn label(&self) -> String {
        format!("e({},{})", self.faces.0, self.faces.1)
    }
}

/// A vertex orbit: the intersection of three faces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Vertex {
    /// The three faces, sorted.
    pub faces: [usize; 3],
    pub vtype: VertexType,
    /// Ids of the incident edges, sorted.
    pub edges: Vec<usize>,
}

impl Vertex {
    pub fn label(&self) -> String {
        format!("v({},{},{})", self.faces[0], self.faces[1], self.faces[2])
    }
}

/// One step of a face boundary: an edge, traversed along its orientation
/// (`forward`) or against it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryStep {
    pub edge: usize,
    pub forward: bool,
}

/// A face orbit with its oriented boundary cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    /// Face number, 1-based.
    pub index: usize,
    pub boundary: Vec<BoundaryStep>,
}

/// The quotient cell complex of the polyhedron.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellComplex {
    pub coxeter: CoxeterMatrix,
    /// `faces[k]` is face number `k + 1`.
    pub faces: Vec<Face>,
    /// Sorted by face pair.
    pub edges: Vec<Edge>,
    /// Sorted by face triple.
    pub vertices: Vec<Vertex>,
}

impl CellComplex {
    pub fn name(&self) -> &str {
        self.coxeter.name()
    }

    pub fn edge_index(&self, i: usize, j: usize) -> Option<usize> {
        let key = (i.min(j), i.max(j));
        self.edges.binary_search_by(|e| e.faces.cmp(&key)).ok()
    }

    pub fn vertex_index(&self, a: usize, b: usize, c: usize) -> Option<usize> {
        let mut key = [a, b, c];
        key.sort_unstable();
        self.vertices.binary_search_by(|v| v.faces.cmp(&key)).ok()
    }

    /// `V − E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Start vertex of a boundary step.
    pub fn step_start(&self, step: &BoundaryStep) -> usize {
        let e = &self.edges[step.edge];
        if step.forward {
            e.source()
        } else {
            e.target()
        }
    }

    /// End vertex of a boundary step.
    pub fn step_end(&self, step: &BoundaryStep) -> usize {
        let e = &self.edges[step.edge];
        if step.forward {
            e.target()
        } else {
            e.source()
        }
    }

    /// Sign with which `face` traverses `edge`: +1 along the edge orientation,
    /// −1 against it, 0 if the edge is not on the face boundary.
    pub fn incidence(&self, face: usize, edge: usize) -> i64 {
        self.faces[face - 1]
            .boundary
            .iter()
            .find(|s| s.edge == edge)
            .map_or(0, |s| if s.forward { 1 } else { -1 })
    }

    /// Reverses the orientation of every face boundary.
    pub fn reverse_orientation(&mut self) {
        for f in &mut self.faces {
            f.boundary.reverse();
            for s in &mut f.boundary {
                s.forward = !s.forward;
            }
        }
    }
}

/// The neighbor faces of `face` in cyclic order: starting from the smallest
/// neighbor, continuing to its smaller link neighbor.
fn face_cycle(
    face: usize,
    edges: &[Edge],
    vertices: &[Vertex],
) -> Result<Vec<usize>, PolyhedronError> {
    let mut link: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for e in edges.iter().filter(|e| e.contains(face)) {
        let g = e.other_face(face);
        let nbrs = e
            .endpoints
            .iter()
            .map(|&v| {
                *vertices[v]
                    .faces
                    .iter()
                    .find(|&&x| x != face && x != g)
                    .expect("three distinct faces")
            })
            .collect();
        link.insert(g, nbrs);
    }
    let bad = || PolyhedronError::FaceLinkNotCycle { face };
    if link.len() < 3 || link.values().any(|n| n.len() != 2) {
        return Err(bad());
    }
    let start = *link.keys().next().expect("nonempty");
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = *link[&start].iter().min().expect("two neighbors");
    while cur != start {
        if cycle.len() > link.len() {
            return Err(bad());
        }
        cycle.push(cur);
        let n = link.get(&cur).ok_or_else(bad)?;
        let next = if n[0] == prev { n[1] } else { n[0] };
        if !link.get(&next).is_some_and(|m| m.contains(&cur)) {
            return Err(bad());
        }
        prev = cur;
        cur = next;
    }
    if cycle.len() != link.len() {
        return Err(bad());
    }
    Ok(cycle)
}

/// Derives the quotient cell complex from the Coxeter matrix.
///
/// Vertices are the spherical triples; each face boundary is reconstructed by
/// chaining the edges of the face through shared vertices; face orientations
/// are propagated breadth-first over the dual graph from face 1 so that the
/// two faces along every edge traverse it in opposite directions. The result
/// is deterministic, including all orientations.
pub fn build_complex(cm: &CoxeterMatrix) -> Result<CellComplex, PolyhedronError> {
    let n = cm.n();
    let mut edges: Vec<Edge> = cm
        .entries()
        .map(|(faces, m)| Edge {
            faces,
            m,
            endpoints: Vec::new(),
        })
        .collect();
    let edge_id: BTreeMap<(usize, usize), usize> = edges
        .iter()
        .enumerate()
        .map(|(k, e)| (e.faces, k))
        .collect();

    let mut vertices = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                let (Some(mab), Some(mac), Some(mbc)) = (cm.m(a, b), cm.m(a, c), cm.m(b, c)) else {
                    continue;
                };
                // Pairwise adjacent faces whose triangle group is infinite
                // (a prismatic 3-circuit) do not meet in a vertex.
                if !is_spherical(mab, mac, mbc) {
                    continue;
                }
                let vtype = VertexType::classify(cm, a, b, c).expect("spherical triple");
                let ids = [edge_id[&(a, b)], edge_id[&(a, c)], edge_id[&(b, c)]];
                vertices.push(Vertex {
                    faces: [a, b, c],
                    vtype,
                    edges: ids.to_vec(),
                });
            }
        }
    }
    for (v, vert) in vertices.iter().enumerate() {
        for &e in &vert.edges {
            edges[e].endpoints.push(v);
        }
    }
    if let Some(e) = edges.iter().find(|e| e.endpoints.len() != 2) {
        return Err(PolyhedronError::EdgeEndpoints {
            i: e.faces.0,
            j: e.faces.1,
            count: e.endpoints.len(),
        });
    }
    let chi = vertices.len() as i64 - edges.len() as i64 + n as i64;
    if chi != 2 {
        return Err(PolyhedronError::EulerCharacteristic(chi));
    }

    let vertex_id = |x: usize, y: usize, z: usize| -> usize {
        let mut k = [x, y, z];
        k.sort_unstable();
        vertices
            .binary_search_by(|v: &Vertex| v.faces.cmp(&k))
            .expect("vertex of consecutive link faces")
    };

    // Canonical boundary of every face, before orientation.
    let mut canonical: Vec<Vec<BoundaryStep>> = Vec::with_capacity(n);
    for f in 1..=n {
        let cycle = face_cycle(f, &edges, &vertices)?;
        let len = cycle.len();
        let steps = (0..len)
            .map(|t| {
                let g = cycle[t];
                let before = cycle[(t + len - 1) % len];
                let after = cycle[(t + 1) % len];
                let e = edge_id[&(f.min(g), f.max(g))];
                let from = vertex_id(f, before, g);
                let to = vertex_id(f, g, after);
                debug_assert!(
                    edges[e].endpoints.contains(&from) && edges[e].endpoints.contains(&to)
                );
                BoundaryStep {
                    edge: e,
                    forward: edges[e].source() == from,
                }
            })
            .collect();
        canonical.push(steps);
    }

    let direction = |steps: &[BoundaryStep], e: usize| -> bool {
        steps
            .iter()
            .find(|s| s.edge == e)
            .expect("edge on boundary")
            .forward
    };
    let mut flipped: Vec<Option<bool>> = vec![None; n];
    flipped[0] = Some(false);
    let mut queue = VecDeque::from([1usize]);
    while let Some(f) = queue.pop_front() {
        let flip_f = flipped[f - 1].expect("visited");
        for step in &canonical[f - 1] {
            let dir_f = step.forward != flip_f;
            let g = edges[step.edge].other_face(f);
            if flipped[g - 1].is_none() {
                let dir_g = direction(&canonical[g - 1], step.edge);
                // g must traverse the shared edge opposite to f.
                flipped[g - 1] = Some(dir_g == dir_f);
                queue.push_back(g);
            }
        }
    }
    if flipped.iter().any(Option::is_none) {
        return Err(PolyhedronError::Disconnected);
    }

    let faces: Vec<Face> = canonical
        .into_iter()
        .enumerate()
        .map(|(k, mut steps)| {
            if flipped[k] == Some(true) {
                steps.reverse();
                for s in &mut steps {
                    s.forward = !s.forward;
                }
            }
            Face {
                index: k + 1,
                boundary: steps,
            }
        })
        .collect();

    for (e, edge) in edges.iter().enumerate() {
        let (i, j) = edge.faces;
        let di = direction(&faces[i - 1].boundary, e);
        let dj = direction(&faces[j - 1].boundary, e);
        if di == dj {
            return Err(PolyhedronError::NonOrientable { i, j });
        }
    }

    let cc = CellComplex {
        coxeter: cm.clone(),
        faces,
        edges,
        vertices,
    };
    let diagnostics = validate(&cc);
    if !diagnostics.is_empty() {
        return Err(PolyhedronError::Invalid(diagnostics));
    }
    Ok(cc)
}
