use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::LinalgError;
use crate::matrix::IntMatrix;

/// Smith normal form `U · A · V = S` together with its unimodular transforms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    /// Nonzero diagonal entries of `S` (the invariant factors), in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s.get(i, i).clone())
            .take_while(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Elimination state. `u` collects the row operations, `v` the column
/// operations and `v_inv` the inverse of `v`; each is optional so that the
/// divisor-only path pays for none of them.
pub(crate) struct Elimination {
    pub a: Vec<Vec<BigInt>>,
    pub u: Option<Vec<Vec<BigInt>>>,
    pub v: Option<Vec<Vec<BigInt>>>,
    pub v_inv: Option<Vec<Vec<BigInt>>>,
    rows: usize,
    cols: usize,
}

fn identity_rows(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// `dst += q · src` on two rows of the same vector of rows.
fn row_axpy(m: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    debug_assert_ne!(dst, src);
    let (d, s) = if dst < src {
        let (lo, hi) = m.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in d.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x += q * y;
        }
    }
}

/// `col_dst += q · col_src`.
fn col_axpy(m: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    for row in m.iter_mut() {
        if !row[src].is_zero() {
            let t = q * &row[src];
            row[dst] += t;
        }
    }
}

fn col_swap(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

impl Elimination {
    pub fn new(a: &IntMatrix, track_u: bool, track_v: bool) -> Self {
        let (rows, cols) = a.shape();
        Elimination {
            a: a.clone().into_rows(),
            u: track_u.then(|| identity_rows(rows)),
            v: track_v.then(|| identity_rows(cols)),
            v_inv: track_v.then(|| identity_rows(cols)),
            rows,
            cols,
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        row_axpy(&mut self.a, dst, src, q);
        if let Some(u) = self.u.as_mut() {
            row_axpy(u, dst, src, q);
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        col_axpy(&mut self.a, dst, src, q);
        if let Some(v) = self.v.as_mut() {
            col_axpy(v, dst, src, q);
        }
        if let Some(vi) = self.v_inv.as_mut() {
            // V ← V·(I + q e_src e_dstᵀ)  ⇒  V⁻¹ ← (I − q e_src e_dstᵀ)·V⁻¹.
            row_axpy(vi, src, dst, &-q);
        }
    }

    fn swap_rows(&mut self, x: usize, y: usize) {
        if x == y {
            return;
        }
        self.a.swap(x, y);
        if let Some(u) = self.u.as_mut() {
            u.swap(x, y);
        }
    }

    fn swap_cols(&mut self, x: usize, y: usize) {
        if x == y {
            return;
        }
        col_swap(&mut self.a, x, y);
        if let Some(v) = self.v.as_mut() {
            col_swap(v, x, y);
        }
        if let Some(vi) = self.v_inv.as_mut() {
            vi.swap(x, y);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for x in self.a[r].iter_mut() {
            *x = -&*x;
        }
        if let Some(u) = self.u.as_mut() {
            for x in u[r].iter_mut() {
                *x = -&*x;
            }
        }
    }

    /// Smallest nonzero |entry| in the trailing submatrix, ties broken by
    /// row-major position.
    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => x.abs() < self.a[bi][bj].abs(),
                };
                if better {
                    best = Some((i, j));
                    if x.abs().is_one() {
                        return best;
                    }
                }
            }
        }
        best
    }

    /// Runs the diagonalisation; returns the rank.
    pub fn run(&mut self) -> usize {
        let n = self.rows.min(self.cols);
        let mut t = 0;
        while t < n {
            let Some((pi, pj)) = self.find_pivot(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut dirty = false;
                for i in t + 1..self.rows {
                    if self.a[i][t].is_zero() {
                        continue;
                    }
                    let q = &self.a[i][t] / &self.a[t][t];
                    if !q.is_zero() {
                        self.add_row(i, t, &-q);
                    }
                    dirty |= !self.a[i][t].is_zero();
                }
                for j in t + 1..self.cols {
                    if self.a[t][j].is_zero() {
                        continue;
                    }
                    let q = &self.a[t][j] / &self.a[t][t];
                    if !q.is_zero() {
                        self.add_col(j, t, &-q);
                    }
                    dirty |= !self.a[t][j].is_zero();
                }
                if dirty {
                    // A remainder smaller than the pivot survived: move the
                    // smallest one into pivot position and repeat.
                    let mut best: Option<(usize, bool)> = None;
                    let mut best_abs = self.a[t][t].abs();
                    for i in t + 1..self.rows {
                        let x = self.a[i][t].abs();
                        if !x.is_zero() && x < best_abs {
                            best_abs = x;
                            best = Some((i, true));
                        }
                    }
                    for j in t + 1..self.cols {
                        let x = self.a[t][j].abs();
                        if !x.is_zero() && x < best_abs {
                            best_abs = x;
                            best = Some((j, false));
                        }
                    }
                    match best {
                        Some((i, true)) => self.swap_rows(t, i),
                        Some((j, false)) => self.swap_cols(t, j),
                        None => unreachable!("nonzero remainder is smaller than the pivot"),
                    }
                    continue;
                }
                // Row and column are clear; enforce divisibility of the rest.
                let p = self.a[t][t].clone();
                let offender = (t + 1..self.rows)
                    .find(|&i| self.a[i][t + 1..].iter().any(|x| !x.is_multiple_of(&p)));
                match offender {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
            t += 1;
        }
        t
    }

    pub fn diagonal(&self, rank: usize) -> Vec<BigInt> {
        (0..rank).map(|i| self.a[i][i].clone()).collect()
    }

    pub fn s_matrix(&self) -> IntMatrix {
        IntMatrix::from_row_vecs(self.rows, self.cols, self.a.clone())
    }

    pub fn u_matrix(&self) -> IntMatrix {
        let u = self.u.clone().expect("row transform tracked");
        IntMatrix::from_row_vecs(self.rows, self.rows, u)
    }

    pub fn v_matrix(&self) -> IntMatrix {
        let v = self.v.clone().expect("column transform tracked");
        IntMatrix::from_row_vecs(self.cols, self.cols, v)
    }

    pub fn v_inv_matrix(&self) -> IntMatrix {
        let v = self.v_inv.clone().expect("column transform tracked");
        IntMatrix::from_row_vecs(self.cols, self.cols, v)
    }
}

/// Smith normal form with transforms, verified exactly before returning:
/// `U·A·V = S`, `S` diagonal with a divisibility chain of nonnegative
/// entries, and `|det U| = |det V| = 1`.
pub fn smith_normal_form(a: &IntMatrix) -> Result<Snf, LinalgError> {
    let mut e = Elimination::new(a, true, true);
    let rank = e.run();
    let snf = Snf {
        s: e.s_matrix(),
        u: e.u_matrix(),
        v: e.v_matrix(),
    };
    verify_snf(a, &snf, rank)?;
    Ok(snf)
}

fn verify_snf(a: &IntMatrix, snf: &Snf, rank: usize) -> Result<(), LinalgError> {
    let product = &(&snf.u * a) * &snf.v;
    if product != snf.s {
        return Err(LinalgError::Verification("U·A·V differs from S"));
    }
    for i in 0..snf.s.rows() {
        for j in 0..snf.s.cols() {
            let x = snf.s.get(i, j);
            if i != j && !x.is_zero() {
                return Err(LinalgError::Verification("S is not diagonal"));
            }
        }
    }
    let diag: Vec<BigInt> = (0..rank).map(|i| snf.s.get(i, i).clone()).collect();
    if diag.iter().any(|d| !d.is_positive()) {
        return Err(LinalgError::Verification("invariant factor not positive"));
    }
    if diag.windows(2).any(|w| !w[1].is_multiple_of(&w[0])) {
        return Err(LinalgError::Verification("divisibility chain broken"));
    }
    if !snf.u.det()?.abs().is_one() || !snf.v.det()?.abs().is_one() {
        return Err(LinalgError::Verification("transform not unimodular"));
    }
    Ok(())
}

/// Nonzero invariant factors of `a` (the diagonal of its Smith normal form),
/// computed without tracking transforms.
pub fn elementary_divisors(a: &IntMatrix) -> Vec<BigInt> {
    let mut e = Elimination::new(a, false, false);
    let rank = e.run();
    e.diagonal(rank)
}
