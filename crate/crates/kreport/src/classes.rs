use polyhedron::{CellComplex, VertexKind};
use serde::Serialize;

/// A set of edges joined by geodesics through vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeClass {
    /// Edge ids, ascending.
    pub edges: Vec<usize>,
    pub labels: Vec<String>,
    /// The common exponent; the stabilizer is `D_m`.
    pub m: u32,
}

/// A direct equivalence of two edges through a vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Merge {
    pub vertex: String,
    pub edges: [String; 2],
}

/// The edge set partitioned into equivalence classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeClassPartition {
    /// Classes ordered by their smallest edge id.
    pub classes: Vec<EdgeClass>,
    /// Every direct equivalence used, in vertex order.
    pub merges: Vec<Merge>,
}

impl EdgeClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Partitions the edges by the local continuation rule.
///
/// A geodesic along an edge continues through a vertex `v` into another
/// edge exactly when `Γ_v` does not contain the antipodal map of the link
/// sphere. Among the vertex groups this happens only for Δ(2,2,m) with `m`
/// odd, where the two `D₂` edges are joined, and for Δ(2,3,3), where the
/// two `D₃` edges are joined. The classes are the transitive closure.
pub fn edge_classes(cc: &CellComplex) -> EdgeClassPartition {
    let n = cc.edges.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut y = x;
        while parent[y] != root {
            let next = parent[y];
            parent[y] = root;
            y = next;
        }
        root
    }

    let mut merges = Vec::new();
    for v in &cc.vertices {
        let joined = match v.vtype.kind {
            VertexKind::Delta22m(m) if m % 2 == 1 => 2,
            VertexKind::Delta233 => 3,
            _ => continue,
        };
        let pair: Vec<usize> = v
            .edges
            .iter()
            .copied()
            .filter(|&e| cc.edges[e].m == joined)
            .collect();
        let [a, b] = pair[..] else {
            unreachable!("{} has two edges of exponent {joined}", v.label())
        };
        merges.push(Merge {
            vertex: v.label(),
            edges: [cc.edges[a].label(), cc.edges[b].label()],
        });
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra.max(rb)] = ra.min(rb);
    }

    let mut classes: Vec<EdgeClass> = Vec::new();
    let mut slot_of_root = vec![usize::MAX; n];
    for e in 0..n {
        let root = find(&mut parent, e);
        if slot_of_root[root] == usize::MAX {
            slot_of_root[root] = classes.len();
            classes.push(EdgeClass {
                edges: Vec::new(),
                labels: Vec::new(),
                m: cc.edges[e].m,
            });
        }
        let class = &mut classes[slot_of_root[root]];
        debug_assert_eq!(class.m, cc.edges[e].m);
        class.edges.push(e);
        class.labels.push(cc.edges[e].label());
    }
    EdgeClassPartition { classes, merges }
}
