use crate::error::RepringError;
use crate::stabilizer::{class_count, StabilizerType};
use crate::tables::irreducible_labels;

/// Change to the transformed basis of a representation ring.
///
/// Row `r` of `matrix` is the `r`-th transformed basis element written in
/// irreducible-character coordinates (the order of the character table).
/// Every matrix here has determinant ±1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseChange {
    pub stype: StabilizerType,
    pub matrix: Vec<Vec<i64>>,
}

impl BaseChange {
    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    /// Human-readable names of the transformed basis elements, e.g.
    /// `chi2+chi3+phi1`.
    pub fn labels(&self) -> Vec<String> {
        let irreps = irreducible_labels(&self.stype).expect("valid type");
        self.matrix
            .iter()
            .map(|row| {
                let mut s = String::new();
                for (c, l) in row.iter().zip(&irreps) {
                    if *c == 0 {
                        continue;
                    }
                    let sign = if *c < 0 {
                        "-"
                    } else if s.is_empty() {
                        ""
                    } else {
                        "+"
                    };
                    let mag = if c.abs() == 1 {
                        String::new()
                    } else {
                        c.abs().to_string()
                    };
                    s.push_str(&format!("{sign}{mag}{l}"));
                }
                if s.is_empty() {
                    "0".into()
                } else {
                    s
                }
            })
            .collect()
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn scale(k: i64, a: &[i64]) -> Vec<i64> {
    a.iter().map(|x| k * x).collect()
}

fn sum(n: usize, parts: &[Vec<i64>]) -> Vec<i64> {
    parts.iter().fold(vec![0; n], |acc, p| add(&acc, p))
}

/// `(v, 0)`: the component `ρ₁ ⊗ v` of a product with a central `C₂`.
fn first_half(v: &[i64]) -> Vec<i64> {
    let mut out = v.to_vec();
    out.extend(std::iter::repeat(0).take(v.len()));
    out
}

/// `(0, v)`: the component `ρ₂ ⊗ v`.
fn second_half(v: &[i64]) -> Vec<i64> {
    let mut out = vec![0; v.len()];
    out.extend_from_slice(v);
    out
}

/// `(−v, v)`: the component `(ρ₂ − ρ₁) ⊗ v`.
fn difference_half(v: &[i64]) -> Vec<i64> {
    let mut out = scale(-1, v);
    out.extend_from_slice(v);
    out
}

/// Dihedral group `D_m` (`m ≥ 2`), coordinates χ₁, χ₂, [χ₃, χ₄,] φ₁, ….
///
/// Odd `m`: `χ₁+χ₂+2Σφ`, `χ₂+Σφ`, then `Σ_{p≥k} φ_p` for each `k`.
/// Even `m`: `Σχ+2Σφ`, `χ₂+χ₃+Σφ`, `χ₃+Σφ`, `χ₂+χ₄+Σφ`, then
/// `Σ_{p≥k} φ_p`. For `m = 2` (no φ) this is `Σχ`, `χ₂+χ₃`, `χ₃`, `χ₂+χ₄`.
fn dihedral(m: u32) -> Vec<Vec<i64>> {
    let n = class_count(&StabilizerType::Dm(m));
    let first_phi = if m % 2 == 0 { 4 } else { 2 };
    let tail = |k: usize| {
        sum(
            n,
            &(first_phi + k - 1..n)
                .map(|i| unit(n, i))
                .collect::<Vec<_>>(),
        )
    };
    let e = |i| unit(n, i);
    let phi_count = n - first_phi;
    let all_phi = tail(1);
    let mut rows = if m % 2 == 1 {
        vec![
            add(&add(&e(0), &e(1)), &scale(2, &all_phi)),
            add(&e(1), &all_phi),
        ]
    } else {
        vec![
            add(&sum(n, &[e(0), e(1), e(2), e(3)]), &scale(2, &all_phi)),
            add(&add(&e(1), &e(2)), &all_phi),
            add(&e(2), &all_phi),
            add(&add(&e(1), &e(3)), &all_phi),
        ]
    };
    rows.extend((1..=phi_count).map(tail));
    rows
}

/// Δ(2,2,2): ρ₁₁₁, ρ₁₁₂−ρ₁₁₁, ρ₁₂₁−ρ₁₁₁, ρ₁₂₂−ρ₁₂₁, ρ₂₁₁−ρ₁₁₁, ρ₂₁₂−ρ₂₁₁,
/// ρ₂₂₁−ρ₁₂₁, ρ₂₂₂−ρ₂₂₁.
fn delta222() -> Vec<Vec<i64>> {
    let e = |i| unit(8, i);
    vec![
        e(0),
        sub(&e(1), &e(0)),
        sub(&e(2), &e(0)),
        sub(&e(3), &e(2)),
        sub(&e(4), &e(0)),
        sub(&e(5), &e(4)),
        sub(&e(6), &e(2)),
        sub(&e(7), &e(6)),
    ]
}

/// Δ(2,2,m) ≅ C₂ × D_m: rows `ρ₁ ⊗ a_r` followed by `(ρ₂ − ρ₁) ⊗ b_r`.
///
/// * m odd: `a = b =` χ₁, χ₂−χ₁, φ₁−χ₂−χ₁, φ_p−φ_{p−1}.
/// * m even, not a power of 2: `a =` χ₁, χ₂−χ₁, χ₃−χ₂, χ₄−χ₁, φ₁−χ₃−χ₁,
///   φ_p−φ_{p−1}; `b =` χ₁, χ₂−χ₁, χ₃−χ₂, χ₄+χ₃−χ₂−χ₁, φ₁−χ₂−χ₁,
///   φ_p−φ_{p−1}.
/// * m a power of 2: `a =` χ₁, χ₂−χ₁, χ₃−χ₁, χ₄−χ₂, φ₁−χ₂−χ₁,
///   φ_p−φ_{p−1}; `b =` χ₁, χ₂−χ₁, χ₃−χ₁, χ₄+χ₃−χ₂−χ₁, φ₁−χ₂−χ₁,
///   φ_p−φ_{p−1}.
fn delta22m(m: u32) -> Vec<Vec<i64>> {
    let n = class_count(&StabilizerType::Dm(m));
    let e = |i| unit(n, i);
    let first_phi = if m % 2 == 0 { 4 } else { 2 };
    let phi = |p: usize| e(first_phi + p - 1);
    let phi_count = n - first_phi;
    let steps: Vec<Vec<i64>> = (2..=phi_count).map(|p| sub(&phi(p), &phi(p - 1))).collect();
    let (a, b): (Vec<Vec<i64>>, Vec<Vec<i64>>) = if m % 2 == 1 {
        let a = vec![e(0), sub(&e(1), &e(0)), sub(&phi(1), &add(&e(1), &e(0)))];
        (a.clone(), a)
    } else if m.is_power_of_two() {
        (
            vec![
                e(0),
                sub(&e(1), &e(0)),
                sub(&e(2), &e(0)),
                sub(&e(3), &e(1)),
                sub(&phi(1), &add(&e(1), &e(0))),
            ],
            vec![
                e(0),
                sub(&e(1), &e(0)),
                sub(&e(2), &e(0)),
                sub(&add(&e(3), &e(2)), &add(&e(1), &e(0))),
                sub(&phi(1), &add(&e(1), &e(0))),
            ],
        )
    } else {
        (
            vec![
                e(0),
                sub(&e(1), &e(0)),
                sub(&e(2), &e(1)),
                sub(&e(3), &e(0)),
                sub(&phi(1), &add(&e(2), &e(0))),
            ],
            vec![
                e(0),
                sub(&e(1), &e(0)),
                sub(&e(2), &e(1)),
                sub(&add(&e(3), &e(2)), &add(&e(1), &e(0))),
                sub(&phi(1), &add(&e(1), &e(0))),
            ],
        )
    };
    a.iter()
        .chain(&steps)
        .map(|v| first_half(v))
        .chain(b.iter().chain(&steps).map(|v| difference_half(v)))
        .collect()
}

/// The S₄ basis ξ̃: ξ₁, ξ₂−ξ₁, ξ₃−ξ₂−ξ₁, ξ₄−ξ₃−ξ₁, ξ₅−ξ₄−ξ₂+ξ₁.
fn s4_tilde() -> Vec<Vec<i64>> {
    let x = |i| unit(5, i);
    vec![
        x(0),
        sub(&x(1), &x(0)),
        sub(&x(2), &add(&x(1), &x(0))),
        sub(&x(3), &add(&x(2), &x(0))),
        add(&sub(&x(4), &add(&x(3), &x(1))), &x(0)),
    ]
}

/// Δ(2,3,4) ≅ S₄ × C₂ in coordinates ρ₁⊗ξ₁..ξ₅, ρ₂⊗ξ₁..ξ₅.
///
/// α₉ is `(ρ₂−ρ₁)⊗(ξ₂+ξ₄)`: it lies in the common kernel of the
/// restrictions to the three edge subgroups and completes a ℤ-basis.
fn delta234() -> Vec<Vec<i64>> {
    let t = s4_tilde();
    let x = |i| unit(5, i);
    let a6 = sub(&second_half(&x(0)), &first_half(&x(1)));
    vec![
        first_half(&x(0)),
        first_half(&t[1]),
        first_half(&t[2]),
        sub(&first_half(&add(&t[3], &scale(2, &t[4]))), &a6),
        first_half(&t[4]),
        a6.clone(),
        add(
            &sub(&second_half(&x(1)), &second_half(&x(0))),
            &first_half(&sub(&x(4), &x(3))),
        ),
        sub(&second_half(&t[2]), &first_half(&t[2])),
        difference_half(&add(&x(1), &x(3))),
        sub(&second_half(&t[4]), &first_half(&t[4])),
    ]
}

/// Δ(2,3,5) ≅ A₅ × C₂ in coordinates ρ₁⊗ξ₁..ξ₅, ρ₂⊗ξ₁..ξ₅.
fn delta235() -> Vec<Vec<i64>> {
    let x = |i| unit(5, i);
    let t2 = sub(&x(1), &scale(4, &x(0)));
    let t3 = sub(&x(2), &add(&x(1), &x(0)));
    let t4 = add(&sub(&x(3), &x(1)), &x(0));
    let t5 = sub(&add(&x(4), &x(3)), &add(&x(0), &x(2)));
    let tt2 = sub(&t2, &add(&t3, &t5));
    vec![
        first_half(&x(0)),
        add(&first_half(&tt2), &scale(2, &first_half(&t4))),
        first_half(&t3),
        first_half(&t4),
        sub(&first_half(&t5), &scale(2, &difference_half(&x(0)))),
        difference_half(&x(0)),
        difference_half(&tt2),
        difference_half(&t3),
        difference_half(&t4),
        difference_half(&add(&t5, &scale(4, &x(0)))),
    ]
}

/// The transformed basis of the representation ring of `t`.
///
/// The trivial group has the identity change of basis.
pub fn base_change(t: &StabilizerType) -> Result<BaseChange, RepringError> {
    t.check(u32::MAX)?;
    let matrix = match *t {
        StabilizerType::Trivial => vec![vec![1]],
        StabilizerType::C2 => vec![vec![1, 1], vec![0, 1]],
        StabilizerType::Dm(m) => dihedral(m),
        StabilizerType::Delta222 => delta222(),
        StabilizerType::Delta22m(m) => delta22m(m),
        StabilizerType::Delta233 => s4_tilde(),
        StabilizerType::Delta234 => delta234(),
        StabilizerType::Delta235 => delta235(),
    };
    debug_assert_eq!(matrix.len(), class_count(t));
    Ok(BaseChange { stype: *t, matrix })
}
