#![allow(dead_code)]

use polyhedron::{build_complex, CellComplex, CoxeterMatrix};

/// The simplex with Coxeter graph given by exponents between all pairs
/// (omitted pairs are 2).
pub fn simplex(name: &str, graph: &[(usize, usize, u32)]) -> CoxeterMatrix {
    let mut triples = Vec::new();
    for i in 1..=4 {
        for j in i + 1..=4 {
            let m = graph
                .iter()
                .find(|&&(a, b, _)| (a, b) == (i, j))
                .map_or(2, |t| t.2);
            triples.push((i, j, m));
        }
    }
    CoxeterMatrix::new(name, 4, triples).unwrap()
}

pub fn lanner(p: u32, q: u32, r: u32) -> CoxeterMatrix {
    simplex(
        &format!("lanner-{p}{q}{r}"),
        &[(1, 2, p), (2, 3, q), (3, 4, r)],
    )
}

pub fn dodecahedron() -> CoxeterMatrix {
    let mut pairs = Vec::new();
    for t in 0..5 {
        pairs.push((1, 2 + t));
        pairs.push((2 + t, 2 + (t + 1) % 5));
        pairs.push((2 + t, 7 + t));
        pairs.push((2 + t, 7 + (t + 4) % 5));
        pairs.push((7 + t, 7 + (t + 1) % 5));
        pairs.push((7 + t, 12));
    }
    CoxeterMatrix::new(
        "ra-dodecahedron",
        12,
        pairs.into_iter().map(|(i, j)| (i, j, 2)),
    )
    .unwrap()
}

/// The nine compact hyperbolic Coxeter simplices.
pub fn compact_simplices() -> Vec<CoxeterMatrix> {
    vec![
        lanner(3, 5, 3),
        lanner(5, 3, 5),
        lanner(4, 3, 5),
        simplex("y-533", &[(1, 2, 5), (2, 3, 3), (2, 4, 3)]),
        simplex("cycle-3334", &[(1, 2, 3), (2, 3, 3), (3, 4, 3), (1, 4, 4)]),
        simplex("cycle-3335", &[(1, 2, 3), (2, 3, 3), (3, 4, 3), (1, 4, 5)]),
        simplex("cycle-3434", &[(1, 2, 3), (2, 3, 4), (3, 4, 3), (1, 4, 4)]),
        simplex("cycle-3435", &[(1, 2, 3), (2, 3, 4), (3, 4, 3), (1, 4, 5)]),
        simplex("cycle-3535", &[(1, 2, 3), (2, 3, 5), (3, 4, 3), (1, 4, 5)]),
    ]
}

/// Triangular prisms with caps perpendicular to the sides. Combinatorially
/// valid inputs exercising Δ(2,2,m) vertices for many m.
pub fn prism(m12: u32, m23: u32, m13: u32) -> CoxeterMatrix {
    let mut t = vec![(1, 2, m12), (2, 3, m23), (1, 3, m13)];
    for side in 1..=3 {
        t.push((side, 4, 2));
        t.push((side, 5, 2));
    }
    CoxeterMatrix::new(format!("prism-{m12}{m23}{m13}"), 5, t).unwrap()
}

pub fn all_inputs() -> Vec<CoxeterMatrix> {
    let mut out = compact_simplices();
    out.push(dodecahedron());
    for (a, b, c) in [
        (6, 3, 3),
        (8, 3, 3),
        (4, 4, 4),
        (7, 3, 3),
        (12, 5, 2),
        (16, 3, 3),
    ] {
        out.push(prism(a, b, c));
    }
    out
}

pub fn complex_of(cm: &CoxeterMatrix) -> CellComplex {
    build_complex(cm).unwrap_or_else(|e| panic!("{}: {e}", cm.name()))
}
