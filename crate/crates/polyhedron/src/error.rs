use thiserror::Error;

/// Reasons a Coxeter matrix or its cell complex is rejected.
#[derive(Debug, Error)]
pub enum PolyhedronError {
    #[error("malformed document: {0}")]
    Malformed(#[from] serde_json::Error),

    #[error("a compact polyhedron needs at least 4 faces, got {0}")]
    TooFewFaces(usize),

    #[error("diagonal entry ({0}, {0}) must not be listed")]
    DiagonalEntry(usize),

    #[error("face index {face} out of range 1..={n}")]
    FaceOutOfRange { face: usize, n: usize },

    #[error("exponent m_{i},{j} = {m} is below 2")]
    ExponentTooSmall { i: usize, j: usize, m: u32 },

    #[error("pair ({i}, {j}) listed twice with different exponents {first} and {second}")]
    ConflictingEntry {
        i: usize,
        j: usize,
        first: u32,
        second: u32,
    },

    #[error("edge e({i},{j}) has {count} endpoint(s), expected 2")]
    EdgeEndpoints { i: usize, j: usize, count: usize },

    #[error("the neighbor link of face {face} is not a single cycle")]
    FaceLinkNotCycle { face: usize },

    #[error("boundary not a sphere: V - E + F = {0}")]
    EulerCharacteristic(i64),

    #[error("the face adjacency graph is disconnected")]
    Disconnected,

    #[error("non-orientable incidence at edge e({i},{j})")]
    NonOrientable { i: usize, j: usize },

    #[error("cell complex failed validation: {0:?}")]
    Invalid(Vec<crate::Diagnostic>),
}
