//! Transcriptions of the printed transformed-basis tables and a classifier
//! comparing them with the computed matrices: identical, equal up to a
//! column permutation, equivalent (same column lattice, i.e. equal up to a
//! unimodular change of basis of the edge group), or not equivalent.
#![allow(dead_code)]

use induction::{induction, Basis, InclusionKey};
use repring::{class_count, StabilizerType};
use zlinalg::{column_hermite_normal_form, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Agreement {
    Identical,
    ColumnPermutation,
    Equivalent,
    NotEquivalent,
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn classify(ours: &IntMatrix, printed: &IntMatrix) -> Agreement {
    assert_eq!(ours.shape(), printed.shape());
    if ours == printed {
        return Agreement::Identical;
    }
    let all_rows: Vec<usize> = (0..ours.rows()).collect();
    if ours.cols() <= 6
        && permutations(ours.cols())
            .iter()
            .any(|p| &ours.submatrix(&all_rows, p) == printed)
    {
        return Agreement::ColumnPermutation;
    }
    if column_hermite_normal_form(ours) == column_hermite_normal_form(printed) {
        Agreement::Equivalent
    } else {
        Agreement::NotEquivalent
    }
}

/// A `total × cols` matrix with the given nonzero rows.
pub fn sparse_rows(cols: usize, total: usize, nonzero: &[(usize, Vec<i64>)]) -> IntMatrix {
    let mut rows = vec![vec![0; cols]; total];
    for (i, r) in nonzero {
        rows[*i] = r.clone();
    }
    IntMatrix::from_rows_with_cols(&rows, cols)
}

pub fn dm_odd_into_product(m: u32) -> IntMatrix {
    let c = class_count(&StabilizerType::Dm(m));
    sparse_rows(
        c,
        2 * c,
        &(0..c)
            .map(|k| (k, (0..c).map(|j| i64::from(j == k)).collect()))
            .collect::<Vec<_>>(),
    )
}

pub fn d2_into_product(m: u32) -> IntMatrix {
    let c = class_count(&StabilizerType::Dm(m));
    sparse_rows(
        4,
        2 * c,
        &[
            (0, vec![1, 0, 0, 0]),
            (1, vec![0, 0, 0, 1]),
            (c, vec![0, 1, 0, 0]),
            (c + 1, vec![0, 0, 1, 0]),
        ],
    )
}

pub fn dm_even_into_product(m: u32, power_of_two: bool) -> IntMatrix {
    let c = class_count(&StabilizerType::Dm(m));
    let pad = |v: [i64; 5]| -> Vec<i64> {
        let mut r = v.to_vec();
        r.resize(c, 0);
        r
    };
    let mut rows: Vec<(usize, Vec<i64>)> = if power_of_two {
        vec![
            (0, pad([1, 0, 0, 0, 0])),
            (1, pad([0, 1, 0, 1, 0])),
            (2, pad([0, 1, 1, 0, 0])),
            (3, pad([0, -1, 0, 0, 0])),
            (4, pad([0, 0, 1, 0, 1])),
        ]
    } else {
        vec![
            (0, pad([1, 0, 0, 0, 0])),
            (1, pad([0, 1, 0, 1, 0])),
            (2, pad([0, 0, 1, -1, 0])),
            (3, pad([0, 0, 0, 1, 0])),
            (4, pad([0, 0, 0, 1, 1])),
        ]
    };
    for k in 5..c {
        rows.push((k, (0..c).map(|j| i64::from(j == k)).collect()));
    }
    sparse_rows(c, 2 * c, &rows)
}

pub fn ours(sup: StabilizerType, p: u8, q: u8, ascending: bool) -> IntMatrix {
    induction(
        &InclusionKey::edge_in_vertex(sup, p, q, ascending),
        Basis::Transformed,
    )
    .unwrap()
    .matrix
}

pub fn delta222_tables() -> Vec<((u8, u8), IntMatrix)> {
    vec![
        (
            (1, 2),
            IntMatrix::from_rows(&[
                [1, 0, 0, 0],
                [0, 1, 0, 0],
                [0, 0, 1, 1],
                [0, 1, 0, -1],
                [0, 0, 0, 0],
                [0, 1, 0, 0],
                [0, 0, 0, 0],
                [0, 1, 0, -1],
            ]),
        ),
        (
            (0, 2),
            IntMatrix::from_rows(&[
                [1, 0, 0, 0],
                [0, 1, 0, 0],
                [0, 0, 0, 0],
                [0, 1, 0, 0],
                [0, 0, 1, 1],
                [0, 1, 0, -1],
                [0, 0, 1, 1],
                [0, 1, 0, -1],
            ]),
        ),
        (
            (0, 1),
            IntMatrix::from_rows(&[
                [1, 0, 0, 0],
                [0, 0, 0, 0],
                [0, 1, 0, 0],
                [0, 0, 0, 0],
                [0, 0, 1, 1],
                [0, 0, 0, 0],
                [0, 0, 1, 0],
                [0, 0, 0, 0],
            ]),
        ),
    ]
}

/// D₃ ↪ S₄.
pub fn s4_d3() -> IntMatrix {
    sparse_rows(
        3,
        5,
        &[(0, vec![1, 0, 0]), (1, vec![0, 1, 0]), (2, vec![0, 0, 1])],
    )
}

/// D₂ ↪ S₄.
pub fn s4_d2() -> IntMatrix {
    sparse_rows(
        4,
        5,
        &[
            (0, vec![1, 0, 0, 0]),
            (1, vec![0, 1, 0, 0]),
            (3, vec![0, 0, 1, 1]),
        ],
    )
}

/// D₃ ↪ S₄ × C₂.
pub fn s4c2_d3() -> IntMatrix {
    sparse_rows(
        3,
        10,
        &[(0, vec![1, 0, 0]), (1, vec![0, 1, 0]), (2, vec![0, 0, 1])],
    )
}

/// D₂ ↪ S₄ × C₂.
pub fn s4c2_d2() -> IntMatrix {
    sparse_rows(
        4,
        10,
        &[
            (0, vec![1, 0, 0, 0]),
            (1, vec![0, 1, 0, 0]),
            (3, vec![0, 0, 1, 1]),
            (5, vec![0, 0, 1, 0]),
            (6, vec![0, 0, 0, 1]),
        ],
    )
}

/// D₄ ↪ S₄ × C₂.
pub fn s4c2_d4() -> IntMatrix {
    sparse_rows(
        5,
        10,
        &[
            (0, vec![1, 0, 0, 0, 0]),
            (1, vec![0, 0, 0, 1, 0]),
            (3, vec![0, 1, 0, -1, 1]),
            (4, vec![0, 0, -1, 0, 0]),
            (5, vec![0, 1, 0, 0, 0]),
        ],
    )
}

/// D₃ ↪ A₅ × C₂.
pub fn a5c2_d3() -> IntMatrix {
    sparse_rows(
        3,
        10,
        &[(0, vec![1, 0, 0]), (2, vec![0, 0, 1]), (5, vec![0, 1, 0])],
    )
}

/// D₅ ↪ A₅ × C₂.
pub fn a5c2_d5() -> IntMatrix {
    sparse_rows(
        4,
        10,
        &[
            (0, vec![1, 0, 0, 0]),
            (1, vec![0, 0, 0, 1]),
            (3, vec![0, 0, -1, 0]),
            (5, vec![0, 1, 0, 0]),
        ],
    )
}

/// D₂ ↪ A₅ × C₂.
pub fn a5c2_d2() -> IntMatrix {
    sparse_rows(
        4,
        10,
        &[
            (0, vec![1, 0, 0, 0]),
            (4, vec![0, 0, 0, 1]),
            (5, vec![0, 1, 1, 0]),
        ],
    )
}

/// One printed table next to the computed matrix it describes.
pub struct PrintedCase {
    pub label: String,
    pub ours: IntMatrix,
    pub printed: IntMatrix,
}

/// Every printed edge-into-vertex table, paired with each inclusion it is
/// printed for (both generator orders where the edge has two).
pub fn printed_cases() -> Vec<PrintedCase> {
    let mut out = Vec::new();
    let mut push = |label: String, ours: IntMatrix, printed: IntMatrix| {
        out.push(PrintedCase {
            label,
            ours,
            printed,
        })
    };
    for ((p, q), printed) in delta222_tables() {
        push(
            format!("Delta(2,2,2) ({p},{q})"),
            ours(StabilizerType::Delta222, p, q, true),
            printed,
        );
    }
    for m in [3u32, 4, 5, 6, 7, 8, 9, 10, 12, 16] {
        let t = StabilizerType::Delta22m(m);
        let dm = if m % 2 == 1 {
            dm_odd_into_product(m)
        } else {
            dm_even_into_product(m, m.is_power_of_two())
        };
        push(format!("{t} D{m} edge"), ours(t, 1, 2, true), dm);
        for ascending in [true, false] {
            for (p, q) in [(0, 1), (0, 2)] {
                let order = if ascending { "ascending" } else { "descending" };
                push(
                    format!("{t} D2 edge ({p},{q}) {order}"),
                    ours(t, p, q, ascending),
                    d2_into_product(m),
                );
            }
        }
    }
    let (s4, s4c2, a5c2) = (
        StabilizerType::Delta233,
        StabilizerType::Delta234,
        StabilizerType::Delta235,
    );
    push(format!("{s4} D3 edge"), ours(s4, 0, 1, true), s4_d3());
    push(format!("{s4} D2 edge"), ours(s4, 0, 2, true), s4_d2());
    push(format!("{s4c2} D3 edge"), ours(s4c2, 0, 1, true), s4c2_d3());
    for ascending in [true, false] {
        push(
            format!("{s4c2} D2 edge ({ascending})"),
            ours(s4c2, 0, 2, ascending),
            s4c2_d2(),
        );
        push(
            format!("{s4c2} D4 edge ({ascending})"),
            ours(s4c2, 1, 2, ascending),
            s4c2_d4(),
        );
    }
    push(format!("{a5c2} D3 edge"), ours(a5c2, 0, 1, true), a5c2_d3());
    push(format!("{a5c2} D5 edge"), ours(a5c2, 1, 2, true), a5c2_d5());
    push(format!("{a5c2} D2 edge"), ours(a5c2, 0, 2, true), a5c2_d2());
    out
}
