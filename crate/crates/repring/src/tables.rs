use std::f64::consts::PI;

use crate::error::RepringError;
use crate::stabilizer::StabilizerType;

/// A conjugacy class, given by a representative word in the Coxeter
/// generators (letters are generator roles: 0 = `s_i`, 1 = `s_j`,
/// 2 = `s_k`) and its size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRep {
    pub word: Vec<u8>,
    pub size: u64,
}

impl ClassRep {
    fn new(word: Vec<u8>, size: u64) -> Self {
        ClassRep { word, size }
    }

    /// The word written with letters `i`, `j`, `k` (`e` for the identity).
    pub fn label(&self) -> String {
        if self.word.is_empty() {
            return "e".to_string();
        }
        self.word
            .iter()
            .map(|&g| ['i', 'j', 'k'][g as usize])
            .collect()
    }
}

/// Character table: rows are irreducible characters, columns conjugacy
/// classes, both in a fixed documented order.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterTable {
    pub stype: StabilizerType,
    pub irreps: Vec<String>,
    pub classes: Vec<ClassRep>,
    pub values: Vec<Vec<f64>>,
}

impl CharacterTable {
    pub fn class_sizes(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.size).collect()
    }

    pub fn order(&self) -> u64 {
        self.classes.iter().map(|c| c.size).sum()
    }

    /// Character degrees (values at the identity, which is always the first
    /// class), rounded to integers.
    pub fn degrees(&self) -> Vec<i64> {
        self.values
            .iter()
            .map(|row| row[0].round() as i64)
            .collect()
    }

    /// Class-size weighted inner product of two class functions.
    pub fn inner_product(&self, a: &[f64], b: &[f64]) -> f64 {
        let total: f64 = self
            .classes
            .iter()
            .zip(a.iter().zip(b))
            .map(|(c, (x, y))| c.size as f64 * x * y)
            .sum();
        total / self.order() as f64
    }
}

/// Variants of the labelling of irreducible characters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TableOptions {
    /// For `D_m` with `m` even: exchange `χ₃` and `χ₄`. This is the table
    /// read with the two generators exchanged.
    pub swap_generators: bool,
    /// For Δ(2,3,5): exchange the two 3-dimensional characters `ξ₄` and `ξ₅`
    /// (in both halves), the labelling induced by the outer automorphism
    /// of `A₅ × C₂`.
    pub swap_xi45: bool,
}

fn dihedral_count_phi(m: u32) -> usize {
    if m % 2 == 0 {
        (m / 2 - 1) as usize
    } else {
        ((m - 1) / 2) as usize
    }
}

/// Dihedral classes on generator letters `(a, b)`: rotations `(ab)^r` for
/// `0 ≤ r ≤ m/2`, then the reflection class of `b`, then (for even `m`)
/// the reflection class of `bab`. Each entry carries `(word, size, is_rotation, r)`.
fn dihedral_classes(m: u32, a: u8, b: u8) -> Vec<(ClassRep, bool, u32)> {
    let mut out = Vec::new();
    for r in 0..=m / 2 {
        let word: Vec<u8> = (0..r).flat_map(|_| [a, b]).collect();
        let size = if r == 0 || 2 * r == m { 1 } else { 2 };
        out.push((ClassRep::new(word, size), true, r));
    }
    if m % 2 == 1 {
        out.push((ClassRep::new(vec![b], u64::from(m)), false, 0));
    } else {
        out.push((ClassRep::new(vec![b], u64::from(m / 2)), false, 0));
        out.push((ClassRep::new(vec![b, a, b], u64::from(m / 2)), false, 1));
    }
    out
}

fn dihedral_rows(
    m: u32,
    classes: &[(ClassRep, bool, u32)],
    swap: bool,
) -> (Vec<String>, Vec<Vec<f64>>) {
    let sign = |r: u32| if r % 2 == 0 { 1.0 } else { -1.0 };
    let row = |f: &dyn Fn(bool, u32) -> f64| -> Vec<f64> {
        classes.iter().map(|(_, rot, r)| f(*rot, *r)).collect()
    };
    let mut labels = vec!["chi1".to_string(), "chi2".to_string()];
    let mut rows = vec![
        row(&|_, _| 1.0),
        row(&|rot, _| if rot { 1.0 } else { -1.0 }),
    ];
    if m % 2 == 0 {
        let chi3 = row(&|_, r| sign(r));
        let chi4 = row(&|rot, r| if rot { sign(r) } else { sign(r + 1) });
        labels.push("chi3".into());
        labels.push("chi4".into());
        if swap {
            rows.push(chi4);
            rows.push(chi3);
        } else {
            rows.push(chi3);
            rows.push(chi4);
        }
    }
    for p in 1..=dihedral_count_phi(m) {
        labels.push(format!("phi{p}"));
        let mm = f64::from(m);
        rows.push(row(&|rot, r| {
            if rot {
                2.0 * (2.0 * PI * p as f64 * f64::from(r) / mm).cos()
            } else {
                0.0
            }
        }));
    }
    (labels, rows)
}

/// Tensor product with the two characters of a central `C₂` factor: rows
/// `ρ₁⊗ψ` then `ρ₂⊗ψ`, where the second half of the columns are the
/// classes multiplied by the central involution.
fn with_central_factor(labels: &[String], rows: &[Vec<f64>]) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut out_labels = Vec::new();
    let mut out_rows = Vec::new();
    for (rho, sign) in [("rho1", 1.0), ("rho2", -1.0)] {
        for (l, r) in labels.iter().zip(rows) {
            out_labels.push(format!("{rho}*{l}"));
            let mut v = r.clone();
            v.extend(r.iter().map(|x| sign * x));
            out_rows.push(v);
        }
    }
    (out_labels, out_rows)
}

/// Characters of S₄ on the classes e, (12), (123), (1234), (12)(34).
const S4: [[f64; 5]; 5] = [
    [1.0, 1.0, 1.0, 1.0, 1.0],
    [1.0, -1.0, 1.0, -1.0, 1.0],
    [2.0, 0.0, -1.0, 0.0, 2.0],
    [3.0, 1.0, 0.0, -1.0, -1.0],
    [3.0, -1.0, 0.0, 1.0, -1.0],
];
const S4_SIZES: [u64; 5] = [1, 6, 8, 6, 3];
const A5_SIZES: [u64; 5] = [1, 20, 15, 12, 12];

fn a5_rows(swap: bool) -> Vec<Vec<f64>> {
    let phi = (1.0 + 5.0_f64.sqrt()) / 2.0;
    let mut rows = vec![
        vec![1.0, 1.0, 1.0, 1.0, 1.0],
        vec![4.0, 1.0, 0.0, -1.0, -1.0],
        vec![5.0, -1.0, 1.0, 0.0, 0.0],
        vec![3.0, 0.0, -1.0, phi, 1.0 - phi],
        vec![3.0, 0.0, -1.0, 1.0 - phi, phi],
    ];
    if swap {
        rows.swap(3, 4);
    }
    rows
}

fn xi_labels() -> Vec<String> {
    (1..=5).map(|k| format!("xi{k}")).collect()
}

fn repeat(word: &[u8], times: usize) -> Vec<u8> {
    word.iter()
        .copied()
        .cycle()
        .take(word.len() * times)
        .collect()
}

/// Character table with the default labelling.
pub fn character_table(t: &StabilizerType) -> Result<CharacterTable, RepringError> {
    character_table_with(t, TableOptions::default())
}

/// Character table with an explicit labelling variant.
///
/// Orders used:
/// * `C₂`: classes e, `s_i`; characters ρ₁ (trivial), ρ₂ (sign).
/// * `D_m`: classes `(s_i s_j)^r` (0 ≤ r ≤ m/2), `s_j`, and `s_j s_i s_j`
///   when `m` is even; characters χ₁, χ₂, χ₃, χ₄ (even `m` only),
///   φ₁ … with `φ_p((s_i s_j)^r) = 2cos(2πpr/m)`. χ₂ is −1 on all
///   reflections, χ₃ is −1 on `s_i` only and χ₄ is −1 on `s_j` only.
/// * Δ(2,2,2): classes `s_i^x s_j^y s_k^z` for `(x, y, z)` in lexicographic
///   order; characters ρ_abc taking value `(−1)^{(a−1)x+(b−1)y+(c−1)z}`.
/// * Δ(2,2,m): the `D_m` data on `(s_j, s_k)`, tensored with the central
///   `C₂ = ⟨s_i⟩`.
/// * Δ(2,3,3) ≅ S₄: classes e, `s_i`, `s_i s_j`, `s_i s_j s_k`, `s_i s_k`.
/// * Δ(2,3,4) ≅ S₄ × C₂ and Δ(2,3,5) ≅ A₅ × C₂: ten classes with the
///   representatives listed in the source; characters ρ₁⊗ξ then ρ₂⊗ξ.
pub fn character_table_with(
    t: &StabilizerType,
    opts: TableOptions,
) -> Result<CharacterTable, RepringError> {
    // The formulas are uniform in m; only the lower bound is enforced here
    // and callers apply their own cap (see `DEFAULT_MAX_M`).
    t.check(u32::MAX)?;
    let (irreps, classes, values) = match *t {
        StabilizerType::Trivial => (
            vec!["tau".to_string()],
            vec![ClassRep::new(vec![], 1)],
            vec![vec![1.0]],
        ),
        StabilizerType::C2 => (
            vec!["rho1".to_string(), "rho2".to_string()],
            vec![ClassRep::new(vec![], 1), ClassRep::new(vec![0], 1)],
            vec![vec![1.0, 1.0], vec![1.0, -1.0]],
        ),
        StabilizerType::Dm(m) => {
            let cls = dihedral_classes(m, 0, 1);
            let (labels, rows) = dihedral_rows(m, &cls, opts.swap_generators);
            (labels, cls.into_iter().map(|c| c.0).collect(), rows)
        }
        StabilizerType::Delta222 => {
            let mut classes = Vec::new();
            let mut cols = Vec::new();
            for x in 0..2u8 {
                for y in 0..2u8 {
                    for z in 0..2u8 {
                        let mut w = vec![0; x as usize];
                        w.extend(std::iter::repeat(1).take(y as usize));
                        w.extend(std::iter::repeat(2).take(z as usize));
                        classes.push(ClassRep::new(w, 1));
                        cols.push((x, y, z));
                    }
                }
            }
            let mut labels = Vec::new();
            let mut rows = Vec::new();
            for a in 1..=2u8 {
                for b in 1..=2u8 {
                    for c in 1..=2u8 {
                        labels.push(format!("rho{a}{b}{c}"));
                        rows.push(
                            cols.iter()
                                .map(|&(x, y, z)| {
                                    let e = (a - 1) * x + (b - 1) * y + (c - 1) * z;
                                    if e % 2 == 0 {
                                        1.0
                                    } else {
                                        -1.0
                                    }
                                })
                                .collect(),
                        );
                    }
                }
            }
            (labels, classes, rows)
        }
        StabilizerType::Delta22m(m) => {
            let cls = dihedral_classes(m, 1, 2);
            let (labels, rows) = dihedral_rows(m, &cls, opts.swap_generators);
            let mut classes: Vec<ClassRep> = cls.iter().map(|c| c.0.clone()).collect();
            let shifted: Vec<ClassRep> = classes
                .iter()
                .map(|c| {
                    let mut w = vec![0];
                    w.extend(&c.word);
                    ClassRep::new(w, c.size)
                })
                .collect();
            classes.extend(shifted);
            let (labels, rows) = with_central_factor(&labels, &rows);
            (labels, classes, rows)
        }
        StabilizerType::Delta233 => (
            xi_labels(),
            [vec![], vec![0], vec![0, 1], vec![0, 1, 2], vec![0, 2]]
                .into_iter()
                .zip(S4_SIZES)
                .map(|(w, s)| ClassRep::new(w, s))
                .collect(),
            S4.iter().map(|r| r.to_vec()).collect(),
        ),
        StabilizerType::Delta234 => {
            let words = [
                vec![],
                vec![0, 2],
                vec![0, 1],
                vec![1, 2],
                vec![1, 2, 1, 2],
                repeat(&[0, 1, 2], 3),
                vec![0],
                vec![0, 1, 2],
                vec![0, 1, 2, 1, 2],
                vec![2],
            ];
            let sizes = S4_SIZES.iter().chain(S4_SIZES.iter());
            let rows: Vec<Vec<f64>> = S4.iter().map(|r| r.to_vec()).collect();
            let (labels, rows) = with_central_factor(&xi_labels(), &rows);
            (
                labels,
                words
                    .into_iter()
                    .zip(sizes)
                    .map(|(w, &s)| ClassRep::new(w, s))
                    .collect(),
                rows,
            )
        }
        StabilizerType::Delta235 => {
            let mut ninth = vec![1, 2];
            ninth.extend(repeat(&[0, 1, 2], 5));
            let words = [
                vec![],
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                repeat(&[0, 1, 2], 4),
                repeat(&[0, 1, 2], 5),
                vec![0, 1, 2, 1, 2],
                vec![0],
                ninth,
                vec![0, 1, 2],
            ];
            let sizes = A5_SIZES.iter().chain(A5_SIZES.iter());
            let (labels, rows) = with_central_factor(&xi_labels(), &a5_rows(opts.swap_xi45));
            (
                labels,
                words
                    .into_iter()
                    .zip(sizes)
                    .map(|(w, &s)| ClassRep::new(w, s))
                    .collect(),
                rows,
            )
        }
    };
    Ok(CharacterTable {
        stype: *t,
        irreps,
        classes,
        values,
    })
}

/// Labels of the irreducible characters, in table order.
pub fn irreducible_labels(t: &StabilizerType) -> Result<Vec<String>, RepringError> {
    Ok(character_table(t)?.irreps)
}
