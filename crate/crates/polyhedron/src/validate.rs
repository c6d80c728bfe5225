use std::fmt;

use serde::Serialize;

use crate::cells::{CellComplex, VertexType};
use crate::coxeter::is_spherical;

/// One invariant violation, naming the offending cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub cell: String,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.cell, self.message)
    }
}

/// Checks every structural invariant of a cell complex and lists each
/// violation. An empty list means the complex is accepted.
pub fn validate(cc: &CellComplex) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let mut report = |cell: String, message: String| out.push(Diagnostic { cell, message });
    let cm = &cc.coxeter;
    let n = cm.n();

    if cc.faces.len() != n {
        report(
            "complex".into(),
            format!(
                "{} faces listed for a matrix with {} faces",
                cc.faces.len(),
                n
            ),
        );
    }
    for (k, f) in cc.faces.iter().enumerate() {
        if f.index != k + 1 {
            report(
                format!("f{}", f.index),
                format!("listed at position {}", k + 1),
            );
        }
    }

    for e in &cc.edges {
        let (i, j) = e.faces;
        if i >= j || cm.m(i, j) != Some(e.m) {
            report(
                e.label(),
                format!("exponent {} does not match the Coxeter matrix", e.m),
            );
        }
        if e.endpoints.len() != 2 {
            report(
                e.label(),
                format!("has {} endpoint(s), expected 2", e.endpoints.len()),
            );
            continue;
        }
        if e.endpoints.iter().any(|&v| v >= cc.vertices.len()) {
            report(e.label(), "endpoint id out of range".into());
            continue;
        }
        let (s, t) = (&cc.vertices[e.endpoints[0]], &cc.vertices[e.endpoints[1]]);
        if s.faces >= t.faces {
            report(e.label(), "endpoints not in lexicographic order".into());
        }
        for v in [s, t] {
            if !(v.faces.contains(&i) && v.faces.contains(&j)) {
                report(
                    e.label(),
                    format!("endpoint {} does not contain the edge", v.label()),
                );
            }
        }
    }
    if cc.edges.len() != cm.entries().count() {
        report(
            "complex".into(),
            format!(
                "{} edges listed, the Coxeter matrix has {} finite pairs",
                cc.edges.len(),
                cm.entries().count()
            ),
        );
    }

    let mut spherical = 0;
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                if let (Some(x), Some(y), Some(z)) = (cm.m(a, b), cm.m(a, c), cm.m(b, c)) {
                    if is_spherical(x, y, z) {
                        spherical += 1;
                        if cc.vertex_index(a, b, c).is_none() {
                            report(
                                format!("v({a},{b},{c})"),
                                "spherical triple missing from the vertex list".into(),
                            );
                        }
                    }
                }
            }
        }
    }
    if cc.vertices.len() != spherical {
        report(
            "complex".into(),
            format!(
                "{} vertices listed, {} spherical triples",
                cc.vertices.len(),
                spherical
            ),
        );
    }
    for v in &cc.vertices {
        let [a, b, c] = v.faces;
        match VertexType::classify(cm, a, b, c) {
            Some(t) if t == v.vtype => {}
            Some(t) => report(v.label(), format!("type {:?} expected {:?}", v.vtype, t)),
            None => report(v.label(), "not a spherical triple".into()),
        }
        if v.edges.len() != 3 {
            report(
                v.label(),
                format!("has {} incident edges, expected 3", v.edges.len()),
            );
        }
        if !(a < b && b < c) {
            report(v.label(), "faces not distinct and sorted".into());
        }
    }

    // Face boundaries: closed cycles covering exactly the edges of the face,
    // and every edge traversed once in each direction overall.
    let mut traversals = vec![(0usize, 0usize); cc.edges.len()];
    for f in &cc.faces {
        let label = format!("f{}", f.index);
        let incident: Vec<usize> = (0..cc.edges.len())
            .filter(|&e| cc.edges[e].contains(f.index))
            .collect();
        let mut seen: Vec<usize> = f.boundary.iter().map(|s| s.edge).collect();
        seen.sort_unstable();
        if seen != incident {
            report(
                label.clone(),
                "boundary does not list each incident edge exactly once".into(),
            );
            continue;
        }
        for s in &f.boundary {
            let slot = &mut traversals[s.edge];
            if s.forward {
                slot.0 += 1;
            } else {
                slot.1 += 1;
            }
        }
        if f.boundary
            .iter()
            .any(|s| cc.edges[s.edge].endpoints.len() != 2)
        {
            // Already reported on the edge itself.
            continue;
        }
        let len = f.boundary.len();
        for t in 0..len {
            let (cur, next) = (&f.boundary[t], &f.boundary[(t + 1) % len]);
            if cc.step_end(cur) != cc.step_start(next) {
                report(
                    label.clone(),
                    format!(
                        "boundary breaks between {} and {}",
                        cc.edges[cur.edge].label(),
                        cc.edges[next.edge].label()
                    ),
                );
            }
        }
    }
    for (e, &(fwd, bwd)) in traversals.iter().enumerate() {
        if (fwd, bwd) != (1, 1) && cc.edges[e].endpoints.len() == 2 {
            report(
                cc.edges[e].label(),
                format!("traversed {fwd} time(s) forward and {bwd} time(s) backward"),
            );
        }
    }

    let chi = cc.euler_characteristic();
    if chi != 2 {
        report(
            "complex".into(),
            format!("boundary not a sphere (V - E + F = {chi})"),
        );
    }
    out
}
