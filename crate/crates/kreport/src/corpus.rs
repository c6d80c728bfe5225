use polyhedron::CoxeterMatrix;
use torsion::{crystallographic_system, heisenberg_system, BlockSystem};

/// A built-in input: a polyhedron, or a raw system of induction blocks.
#[derive(Clone, Debug)]
pub enum CorpusEntry {
    Polyhedron(CoxeterMatrix),
    Blocks(BlockSystem),
}

/// Names and one-line descriptions of the built-in inputs.
pub const CORPUS: &[(&str, &str)] = &[
    (
        "lanner-435",
        "compact simplex with linear Coxeter diagram 4-3-5",
    ),
    (
        "lanner-535",
        "compact simplex with linear Coxeter diagram 5-3-5",
    ),
    (
        "lanner-353",
        "compact simplex with linear Coxeter diagram 3-5-3",
    ),
    ("ra-dodecahedron", "right-angled dodecahedron"),
    (
        "heisenberg-blocks",
        "induction blocks into C4 of the Heisenberg semidirect product",
    ),
    (
        "crystallographic-z5",
        "Z^n x| Z/5 with one Z/5 vertex orbit and trivial edges",
    ),
];

/// The simplex whose Coxeter diagram is the path 1 —p— 2 —q— 3 —r— 4.
pub fn lanner(p: u32, q: u32, r: u32) -> CoxeterMatrix {
    let triples = [
        (1, 2, p),
        (2, 3, q),
        (3, 4, r),
        (1, 3, 2),
        (1, 4, 2),
        (2, 4, 2),
    ];
    CoxeterMatrix::new(format!("lanner-{p}{q}{r}"), 4, triples).expect("valid simplex")
}

/// The right-angled dodecahedron: face 1 on top, faces 2–6 around it,
/// faces 7–11 below them and face 12 at the bottom.
pub fn ra_dodecahedron() -> CoxeterMatrix {
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
    .expect("valid dodecahedron")
}

pub fn corpus_entry(name: &str) -> Option<CorpusEntry> {
    let entry = match name {
        "lanner-435" => CorpusEntry::Polyhedron(lanner(4, 3, 5)),
        "lanner-535" => CorpusEntry::Polyhedron(lanner(5, 3, 5)),
        "lanner-353" => CorpusEntry::Polyhedron(lanner(3, 5, 3)),
        "ra-dodecahedron" => CorpusEntry::Polyhedron(ra_dodecahedron()),
        "heisenberg-blocks" => CorpusEntry::Blocks(heisenberg_system(1)),
        "crystallographic-z5" => CorpusEntry::Blocks(crystallographic_system(5, 3)),
        _ => return None,
    };
    Some(entry)
}
