use std::fs;
use std::path::{Path, PathBuf};

use induction::{induction_with, Basis, InclusionKey, InductionOptions};
use polyhedron::{CellComplex, VertexKind, VertexType};
use repring::{class_count, StabilizerType, DEFAULT_MAX_M};
use zlinalg::{homology, write_triplets, HomologyGroup, IntMatrix};

use crate::error::ComplexError;

/// Assembly settings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AssemblyOptions {
    pub basis: Basis,
    /// Largest edge exponent accepted.
    pub max_m: u32,
    /// Labelling variant for Δ(2,3,5) vertices (see `induction`).
    pub delta235_swap: bool,
}

impl Default for AssemblyOptions {
    fn default() -> Self {
        AssemblyOptions {
            basis: Basis::Standard,
            max_m: DEFAULT_MAX_M,
            delta235_swap: false,
        }
    }
}

/// Coordinates of one cell inside a chain group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Cell label such as `f3`, `e(1,2)` or `v(1,2,3)`.
    pub cell: String,
    pub stabilizer: StabilizerType,
    pub offset: usize,
    pub len: usize,
}

impl Block {
    pub fn range(&self) -> std::ops::Range<usize> {
        self.offset..self.offset + self.len
    }
}

/// The three boundary maps with the block layout of each chain group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    pub name: String,
    pub basis: Basis,
    /// `∂₁ : C₁ → C₀`.
    pub d1: IntMatrix,
    /// `∂₂ : C₂ → C₁`.
    pub d2: IntMatrix,
    /// `∂₃ : C₃ → C₂`.
    pub d3: IntMatrix,
    pub vertex_blocks: Vec<Block>,
    pub edge_blocks: Vec<Block>,
    pub face_blocks: Vec<Block>,
}

impl ChainComplex {
    /// Ranks `(r₀, r₁, r₂, r₃)` of the chain groups.
    pub fn ranks(&self) -> [usize; 4] {
        [
            self.d1.rows(),
            self.d1.cols(),
            self.d2.cols(),
            self.d3.cols(),
        ]
    }

    /// `r₀ − r₁ + r₂ − r₃`.
    pub fn euler_characteristic(&self) -> i64 {
        let [r0, r1, r2, r3] = self.ranks().map(|r| r as i64);
        r0 - r1 + r2 - r3
    }

    /// Homology groups `H₀ … H₃`.
    pub fn homology(&self) -> Result<[HomologyGroup; 4], ComplexError> {
        let [r0, _, _, r3] = self.ranks();
        Ok([
            homology(&IntMatrix::zeros(0, r0), &self.d1)?,
            homology(&self.d1, &self.d2)?,
            homology(&self.d2, &self.d3)?,
            homology(&self.d3, &IntMatrix::zeros(r3, 0))?,
        ])
    }

    /// Writes `d1.txt`, `d2.txt`, `d3.txt` in the triplet format into `dir`.
    pub fn dump(&self, dir: &Path) -> Result<Vec<PathBuf>, ComplexError> {
        fs::create_dir_all(dir)?;
        let mut written = Vec::new();
        for (name, m, from, to) in [
            ("d1", &self.d1, "C1", "C0"),
            ("d2", &self.d2, "C2", "C1"),
            ("d3", &self.d3, "C3", "C2"),
        ] {
            let header = [
                format!("{} boundary map {from} -> {to}", self.name),
                format!("basis: {}", self.basis),
                "rows cols, then one 'row col value' triplet per nonzero entry (0-based)"
                    .to_string(),
            ];
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            let path = dir.join(format!("{name}.txt"));
            fs::write(&path, write_triplets(m, &header))?;
            written.push(path);
        }
        Ok(written)
    }
}

/// True iff `∂₁∂₂ = 0` and `∂₂∂₃ = 0` exactly.
pub fn verify(chain: &ChainComplex) -> bool {
    let zero =
        |a: &IntMatrix, b: &IntMatrix| a.checked_mul(b).map(|p| p.is_zero()).unwrap_or(false);
    zero(&chain.d1, &chain.d2) && zero(&chain.d2, &chain.d3)
}

/// The stabilizer type of a vertex.
pub fn vertex_stabilizer(t: &VertexType) -> StabilizerType {
    match t.kind {
        VertexKind::Delta222 => StabilizerType::Delta222,
        VertexKind::Delta22m(m) => StabilizerType::Delta22m(m),
        VertexKind::Delta233 => StabilizerType::Delta233,
        VertexKind::Delta234 => StabilizerType::Delta234,
        VertexKind::Delta235 => StabilizerType::Delta235,
    }
}

/// The inclusion of the stabilizer of `edge` into that of `vertex`.
///
/// The edge's own generators are ordered by face index; their roles in the
/// vertex give the key.
pub fn edge_inclusion(cc: &CellComplex, edge: usize, vertex: usize) -> InclusionKey {
    let e = &cc.edges[edge];
    let v = &cc.vertices[vertex];
    let role = |f: usize| v.vtype.role_of(f).expect("edge face lies on the vertex") as u8;
    InclusionKey {
        sup: vertex_stabilizer(&v.vtype),
        generators: vec![role(e.faces.0), role(e.faces.1)],
    }
}

/// The inclusion of the stabilizer of `face` into that of `edge`.
pub fn face_inclusion(cc: &CellComplex, face: usize, edge: usize) -> InclusionKey {
    let e = &cc.edges[edge];
    InclusionKey::face_in_edge(e.m, e.faces.0 == face)
}

fn blocks<T>(items: &[T], f: impl Fn(&T) -> (String, StabilizerType)) -> Vec<Block> {
    let mut offset = 0;
    items
        .iter()
        .map(|x| {
            let (cell, stabilizer) = f(x);
            let len = class_count(&stabilizer);
            let b = Block {
                cell,
                stabilizer,
                offset,
                len,
            };
            offset += len;
            b
        })
        .collect()
}

fn total(blocks: &[Block]) -> usize {
    blocks.last().map_or(0, |b| b.offset + b.len)
}

/// Assembles the chain complex with default options in the given basis.
pub fn assemble(cc: &CellComplex, basis: Basis) -> Result<ChainComplex, ComplexError> {
    assemble_with(
        cc,
        AssemblyOptions {
            basis,
            ..AssemblyOptions::default()
        },
    )
}

pub fn assemble_with(
    cc: &CellComplex,
    opts: AssemblyOptions,
) -> Result<ChainComplex, ComplexError> {
    for e in &cc.edges {
        if e.m > opts.max_m {
            return Err(ComplexError::ExponentTooLarge {
                edge: e.label(),
                m: e.m,
                max: opts.max_m,
            });
        }
    }
    let iopts = InductionOptions {
        delta235_swap: opts.delta235_swap,
    };
    let block = |key: &InclusionKey, cell: String| -> Result<IntMatrix, ComplexError> {
        induction_with(key, opts.basis, iopts)
            .map(|m| m.matrix)
            .map_err(|source| ComplexError::MissingInduction { cell, source })
    };

    let face_blocks = blocks(&cc.faces, |f| (format!("f{}", f.index), StabilizerType::C2));
    let edge_blocks = blocks(&cc.edges, |e| (e.label(), StabilizerType::Dm(e.m)));
    let vertex_blocks = blocks(&cc.vertices, |v| (v.label(), vertex_stabilizer(&v.vtype)));

    let mut d3 = IntMatrix::zeros(total(&face_blocks), 1);
    let to_face = block(&InclusionKey::trivial_in_face(), "3-cell".into())?;
    for fb in &face_blocks {
        d3.add_block(fb.offset, 0, &to_face, 1);
    }

    let mut d2 = IntMatrix::zeros(total(&edge_blocks), total(&face_blocks));
    for (ei, e) in cc.edges.iter().enumerate() {
        for face in [e.faces.0, e.faces.1] {
            let sign = cc.incidence(face, ei);
            let m = block(
                &face_inclusion(cc, face, ei),
                format!("f{face} in {}", e.label()),
            )?;
            d2.add_block(
                edge_blocks[ei].offset,
                face_blocks[face - 1].offset,
                &m,
                sign,
            );
        }
    }

    let mut d1 = IntMatrix::zeros(total(&vertex_blocks), total(&edge_blocks));
    for (ei, e) in cc.edges.iter().enumerate() {
        for (v, sign) in [(e.target(), 1), (e.source(), -1)] {
            let cell = format!("{} in {}", e.label(), cc.vertices[v].label());
            let m = block(&edge_inclusion(cc, ei, v), cell)?;
            d1.add_block(vertex_blocks[v].offset, edge_blocks[ei].offset, &m, sign);
        }
    }

    Ok(ChainComplex {
        name: cc.name().to_string(),
        basis: opts.basis,
        d1,
        d2,
        d3,
        vertex_blocks,
        edge_blocks,
        face_blocks,
    })
}
