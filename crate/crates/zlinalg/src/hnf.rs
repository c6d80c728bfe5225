use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::matrix::IntMatrix;

/// Row-style Hermite normal form `H = U·A` with `U` unimodular.
///
/// `H` is in row echelon form, each pivot is positive, entries above a pivot
/// lie in `[0, pivot)`, and zero rows sit at the bottom. Two matrices with the
/// same number of columns have equal HNF iff their rows span the same lattice
/// and they have the same number of rows.
pub fn hermite_normal_form(a: &IntMatrix) -> IntMatrix {
    let (rows, cols) = a.shape();
    let mut m = a.clone().into_rows();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Euclid on column c among rows r.. until a single nonzero remains.
        loop {
            let pivot = (r..rows)
                .filter(|&i| !m[i][c].is_zero())
                .min_by(|&x, &y| m[x][c].abs().cmp(&m[y][c].abs()).then(x.cmp(&y)));
            let Some(p) = pivot else {
                break;
            };
            m.swap(r, p);
            let mut clean = true;
            for i in r + 1..rows {
                if m[i][c].is_zero() {
                    continue;
                }
                let q = m[i][c].div_floor(&m[r][c]);
                let (lo, hi) = m.split_at_mut(i);
                for (x, y) in hi[0].iter_mut().zip(lo[r].iter()) {
                    *x -= &q * y;
                }
                clean &= m[i][c].is_zero();
            }
            if clean {
                break;
            }
        }
        if m[r][c].is_zero() {
            continue;
        }
        if m[r][c].is_negative() {
            for x in m[r].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = m[i][c].div_floor(&m[r][c]);
            if q.is_zero() {
                continue;
            }
            let (lo, hi) = m.split_at_mut(r);
            for (x, y) in lo[i].iter_mut().zip(hi[0].iter()) {
                *x -= &q * y;
            }
        }
        r += 1;
    }
    IntMatrix::from_row_vecs(rows, cols, m)
}

/// Column-style Hermite normal form `A·V` (transpose of the row form of
/// `Aᵀ`). Equal column HNFs mean `B = A·V` for some unimodular `V`.
pub fn column_hermite_normal_form(a: &IntMatrix) -> IntMatrix {
    hermite_normal_form(&a.transpose()).transpose()
}
