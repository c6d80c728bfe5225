use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use zlinalg::{BigInt, IntMatrix};

/// A matrix after [`reduce`], together with the surviving original indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub matrix: IntMatrix,
    /// Original row index of each remaining row.
    pub rows: Vec<usize>,
    /// Original column index of each remaining column.
    pub cols: Vec<usize>,
}

/// Repeatedly discards rows and columns with at most one nonzero entry when
/// that entry is ±1.
///
/// Expanding a minor along such a line gives ± a smaller minor (or 0), so
/// the matrix has all minors in {−1, 0, 1} exactly when the reduced matrix
/// does. Rows are swept before columns, and sweeps repeat until nothing
/// changes.
pub fn reduce(m: &IntMatrix) -> IntMatrix {
    reduce_tracked(m).matrix
}

/// [`reduce`], keeping track of which original rows and columns survive.
pub fn reduce_tracked(m: &IntMatrix) -> Reduction {
    let mut rows: Vec<usize> = (0..m.rows()).collect();
    let mut cols: Vec<usize> = (0..m.cols()).collect();
    let removable = |line: &mut dyn Iterator<Item = &BigInt>| {
        let mut nonzero = line.filter(|x| !x.is_zero());
        match (nonzero.next(), nonzero.next()) {
            (None, _) => true,
            (Some(x), None) => x.abs().is_one(),
            _ => false,
        }
    };
    loop {
        let before = (rows.len(), cols.len());
        rows.retain(|&i| !removable(&mut cols.iter().map(|&j| m.get(i, j))));
        cols.retain(|&j| !removable(&mut rows.iter().map(|&i| m.get(i, j))));
        if (rows.len(), cols.len()) == before {
            break;
        }
    }
    if rows.is_empty() || cols.is_empty() {
        rows.clear();
        cols.clear();
    }
    Reduction {
        matrix: m.submatrix(&rows, &cols),
        rows,
        cols,
    }
}

/// A square submatrix whose determinant lies outside {−1, 0, 1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Row indices in the input matrix.
    pub rows: Vec<usize>,
    /// Column indices in the input matrix.
    pub cols: Vec<usize>,
    pub det: BigInt,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rows {:?}, cols {:?}, det {}",
            self.rows, self.cols, self.det
        )
    }
}

/// Outcome of a minor enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorReport {
    /// Every enumerated minor lies in {−1, 0, 1}.
    pub ok: bool,
    /// Largest minor size enumerated (the failing size when `ok` is false).
    pub max_size_checked: usize,
    /// The first failing minor in enumeration order.
    pub witness: Option<Witness>,
    pub original_size: (usize, usize),
    pub reduced_size: (usize, usize),
    /// Number of minors evaluated.
    pub minors_checked: u64,
}

impl fmt::Display for MinorReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (r, c) = self.original_size;
        let (rr, rc) = self.reduced_size;
        write!(
            f,
            "{} ({r}x{c} reduced to {rr}x{rc}, {} minors up to size {})",
            if self.ok { "ok" } else { "FAIL" },
            self.minors_checked,
            self.max_size_checked
        )?;
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}

/// Checks that every `k×k` minor, `1 ≤ k ≤ cap`, lies in {−1, 0, 1}.
///
/// The matrix is [`reduce`]d first. With `cap = None` the rank of the reduced
/// matrix is used, beyond which all minors vanish. Minors are enumerated by
/// increasing size, then lexicographically by row set and column set, and
/// the first failure is returned as the witness (in input indices).
///
/// Each `k×k` determinant is expanded along its first row into `(k−1)×(k−1)`
/// minors of the previous size, which are kept in a table. Since the
/// enumeration stops at the first size that fails, every tabulated value is
/// in {−1, 0, 1} and the expansion never overflows.
pub fn all_minors_unimodular(m: &IntMatrix, cap: Option<usize>) -> MinorReport {
    let red = reduce_tracked(m);
    let a = &red.matrix;
    let (r, c) = a.shape();
    let cap = cap.unwrap_or_else(|| a.rank()).min(r).min(c);
    let mut report = MinorReport {
        ok: true,
        max_size_checked: 0,
        witness: None,
        original_size: m.shape(),
        reduced_size: (r, c),
        minors_checked: 0,
    };
    if cap == 0 {
        return report;
    }
    let witness = |rows: &[usize], cols: &[usize], det: BigInt| Witness {
        rows: rows.iter().map(|&i| red.rows[i]).collect(),
        cols: cols.iter().map(|&j| red.cols[j]).collect(),
        det,
    };

    // Size 1: the entries themselves, compared exactly.
    report.max_size_checked = 1;
    for i in 0..r {
        for j in 0..c {
            report.minors_checked += 1;
            if a.get(i, j).abs() > BigInt::one() {
                report.ok = false;
                report.witness = Some(witness(&[i], &[j], a.get(i, j).clone()));
                return report;
            }
        }
    }
    let entry = |i: usize, j: usize| a.get_i64(i, j).expect("entries are in {-1, 0, 1}");

    if r > 128 || c > 128 {
        return enumerate_direct(a, cap, report, witness);
    }

    // `prev` maps (row mask, column mask) of every (k−1)-minor to its value.
    let mut prev: HashMap<(u128, u128), i64> = HashMap::new();
    for i in 0..r {
        for j in 0..c {
            prev.insert((1 << i, 1 << j), entry(i, j));
        }
    }
    for k in 2..=cap {
        report.max_size_checked = k;
        let mut next = HashMap::new();
        for rows in (0..r).combinations(k) {
            let head = rows[0];
            let tail_mask = rows[1..].iter().fold(0u128, |acc, &i| acc | 1 << i);
            for cols in (0..c).combinations(k) {
                let col_mask = cols.iter().fold(0u128, |acc, &j| acc | 1 << j);
                let mut det = 0i64;
                for (pos, &j) in cols.iter().enumerate() {
                    let x = entry(head, j);
                    if x != 0 {
                        let sub = prev[&(tail_mask, col_mask & !(1 << j))];
                        det += if pos % 2 == 0 { x * sub } else { -x * sub };
                    }
                }
                report.minors_checked += 1;
                if det.abs() > 1 {
                    report.ok = false;
                    report.witness = Some(witness(&rows, &cols, BigInt::from(det)));
                    return report;
                }
                let row_mask = tail_mask | 1 << head;
                next.insert((row_mask, col_mask), det);
            }
        }
        prev = next;
    }
    report
}

/// Fallback for matrices too wide for bit masks: exact determinants one by one.
fn enumerate_direct(
    a: &IntMatrix,
    cap: usize,
    mut report: MinorReport,
    witness: impl Fn(&[usize], &[usize], BigInt) -> Witness,
) -> MinorReport {
    let (r, c) = a.shape();
    for k in 2..=cap {
        report.max_size_checked = k;
        for rows in (0..r).combinations(k) {
            for cols in (0..c).combinations(k) {
                let det = a.submatrix(&rows, &cols).det().expect("square submatrix");
                report.minors_checked += 1;
                if det.abs() > BigInt::one() {
                    report.ok = false;
                    report.witness = Some(witness(&rows, &cols, det));
                    return report;
                }
            }
        }
    }
    report
}
