//! Plain-text sparse triplet format.
//!
//! ```text
//! # any number of comment lines starting with '#'
//! <rows> <cols>
//! <row> <col> <value>      (0-based indices, one nonzero entry per line)
//! ```
//!
//! Blank lines are ignored. Repeated positions are summed.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::LinalgError;
use crate::matrix::IntMatrix;

/// Serialises `m` in triplet format with the given comment header lines.
pub fn write_triplets(m: &IntMatrix, header: &[&str]) -> String {
    let mut out = String::new();
    for line in header {
        let _ = writeln!(out, "# {line}");
    }
    let _ = writeln!(out, "{} {}", m.rows(), m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let x = m.get(i, j);
            if !x.is_zero() {
                let _ = writeln!(out, "{i} {j} {x}");
            }
        }
    }
    out
}

/// Parses a matrix in triplet format.
pub fn read_triplets(text: &str) -> Result<IntMatrix, LinalgError> {
    let err = |line: usize, message: &str| LinalgError::Triplet {
        line,
        message: message.to_string(),
    };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines
        .next()
        .ok_or_else(|| err(0, "missing dimension line"))?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    if dims.len() != 2 {
        return Err(err(hline, "expected '<rows> <cols>'"));
    }
    let rows = usize::from_str(dims[0]).map_err(|_| err(hline, "bad row count"))?;
    let cols = usize::from_str(dims[1]).map_err(|_| err(hline, "bad column count"))?;
    let mut m = IntMatrix::zeros(rows, cols);
    for (ln, line) in lines {
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 3 {
            return Err(err(ln, "expected '<row> <col> <value>'"));
        }
        let i = usize::from_str(f[0]).map_err(|_| err(ln, "bad row index"))?;
        let j = usize::from_str(f[1]).map_err(|_| err(ln, "bad column index"))?;
        let v = BigInt::from_str(f[2]).map_err(|_| err(ln, "bad value"))?;
        if i >= rows || j >= cols {
            return Err(err(ln, "index out of range"));
        }
        m.add_to(i, j, &v);
    }
    Ok(m)
}
