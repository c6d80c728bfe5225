//! The induction homomorphisms in the standard basis, transcribed as linear
//! forms: each string is one row (an irreducible character of the larger
//! group) written in the coordinates `a, b, c, …` of the subgroup.
//!
//! Where the subgroup is `D_2 = ⟨s, t⟩` the forms are written in the order
//! ρ₁₁, ρ₁₂, ρ₂₁, ρ₂₂ (ρ_xy is −1 on `s` iff x = 2 and on `t` iff y = 2); they
//! are converted to the χ-order χ₁, χ₂, χ₃, χ₄ used everywhere else, i.e.
//! `(a, b, c, d) = (χ₁, χ₄, χ₃, χ₂)`.

use repring::{class_count, StabilizerType};

/// Parses one linear form such as `2a+b-c` over `cols` variables.
fn parse_form(form: &str, cols: usize) -> Vec<i64> {
    let mut out = vec![0; cols];
    let mut rest = form;
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'-' => (-1, &rest[1..]),
            b'+' => (1, &rest[1..]),
            _ => (1, rest),
        };
        let digits = body.bytes().take_while(u8::is_ascii_digit).count();
        let coeff: i64 = if digits == 0 {
            1
        } else {
            body[..digits].parse().expect("coefficient")
        };
        let var = body.as_bytes()[digits];
        let idx = usize::from(var - b'a');
        assert!(
            idx < cols,
            "variable {} out of range in {form}",
            var as char
        );
        out[idx] += sign * coeff;
        rest = &body[digits + 1..];
    }
    out
}

fn parse_figure<S: AsRef<str>>(forms: &[S], cols: usize) -> Vec<Vec<i64>> {
    forms.iter().map(|f| parse_form(f.as_ref(), cols)).collect()
}

fn words(s: &str) -> Vec<&str> {
    s.split_whitespace().collect()
}

/// Reorders the columns of a figure written in ρ-order into χ-order.
fn rho_to_chi(rows: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    const RHO_OF_CHI: [usize; 4] = [0, 3, 2, 1];
    rows.into_iter()
        .map(|r| RHO_OF_CHI.iter().map(|&k| r[k]).collect())
        .collect()
}

fn phi_count(m: u32) -> usize {
    class_count(&StabilizerType::Dm(m)) - if m % 2 == 0 { 4 } else { 2 }
}

pub(crate) fn trivial_to_c2() -> Vec<Vec<i64>> {
    vec![vec![1], vec![1]]
}

/// `(a, b) ↦ (a, b, b̂, â, a+b, …)` when the face is the first generator,
/// `(a, b, â, b̂, a+b, …)` otherwise; hatted entries exist iff `m` is even.
pub(crate) fn c2_to_dm(m: u32, first: bool) -> Vec<Vec<i64>> {
    let mut forms = vec!["a", "b"];
    if m % 2 == 0 {
        forms.extend(if first { ["b", "a"] } else { ["a", "b"] });
    }
    forms.extend(std::iter::repeat("a+b").take(phi_count(m)));
    parse_figure(&forms, 2)
}

fn delta222(p: u8, q: u8) -> Vec<Vec<i64>> {
    let f = match (p, q) {
        (0, 1) => "a a b b c c d d",
        (0, 2) => "a b a b c d c d",
        _ => "a b c d a b c d",
    };
    rho_to_chi(parse_figure(&words(f), 4))
}

/// Δ(2,2,m) with `s_i` central. The `D_2` edges `⟨s_i, s_j⟩` and
/// `⟨s_i, s_k⟩` give the two halves `ρ₁⊗·` and `ρ₂⊗·`; the `D_m` edge
/// `⟨s_j, s_k⟩` maps identically into both halves.
fn delta22m(m: u32, p: u8, q: u8, ascending: bool) -> Vec<Vec<i64>> {
    let n = class_count(&StabilizerType::Dm(m));
    if (p, q) == (1, 2) {
        // The identity into both halves; with the generators reversed the
        // edge's χ₃ and χ₄ trade places (even m only).
        let col = |c: usize| {
            if !ascending && m % 2 == 0 && (c == 2 || c == 3) {
                5 - c
            } else {
                c
            }
        };
        return (0..2 * n)
            .map(|r| (0..n).map(|c| i64::from(r % n == col(c))).collect())
            .collect();
    }
    let half = |x: &str, y: &str, h1: &str, h2: &str| {
        let mut v = vec![x.to_string(), y.to_string()];
        if m % 2 == 0 {
            v.push(h1.to_string());
            v.push(h2.to_string());
        }
        v.extend(std::iter::repeat(format!("{x}+{y}")).take(phi_count(m)));
        v
    };
    let forms = match ((p, q), ascending) {
        ((0, 1), true) => [half("a", "b", "b", "a"), half("c", "d", "d", "c")].concat(),
        ((0, 1), false) => [half("a", "c", "c", "a"), half("b", "d", "d", "b")].concat(),
        (_, true) => [half("a", "b", "a", "b"), half("c", "d", "c", "d")].concat(),
        (_, false) => [half("a", "c", "a", "c"), half("b", "d", "b", "d")].concat(),
    };
    rho_to_chi(parse_figure(&forms, 4))
}

/// Δ(2,3,3) ≅ S₄ with `s_j` the middle generator.
fn delta233(p: u8, q: u8) -> Vec<Vec<i64>> {
    if (p, q) == (0, 2) {
        rho_to_chi(parse_figure(&words("a d a+d a+b+c b+c+d"), 4))
    } else {
        parse_figure(&words("a b c a+c b+c"), 3)
    }
}

/// Δ(2,3,4) ≅ S₄ × C₂, with `m_ij = 3`, `m_jk = 4`.
fn delta234(p: u8, q: u8, ascending: bool) -> Vec<Vec<i64>> {
    match ((p, q), ascending) {
        ((0, 1), _) => parse_figure(&words("a b c a+c b+c b a c b+c a+c"), 3),
        ((0, 2), true) => rho_to_chi(parse_figure(
            &words("a c a+c a+b+d b+c+d d b b+d a+c+d a+b+c"),
            4,
        )),
        ((0, 2), false) => rho_to_chi(parse_figure(
            &words("a b a+b a+c+d b+c+d d c c+d a+b+d a+b+c"),
            4,
        )),
        (_, true) => parse_figure(&words("a c a+c d+e b+e b d b+d c+e a+e"), 5),
        (_, false) => parse_figure(&words("a d a+d c+e b+e b c b+c d+e a+e"), 5),
    }
}

/// Δ(2,3,5) ≅ A₅ × C₂, with `m_ij = 3`, `m_jk = 5`. The three maps do not
/// depend on the order case.
fn delta235(p: u8, q: u8) -> Vec<Vec<i64>> {
    match (p, q) {
        (0, 1) => parse_figure(&words("a a+b+c a+2c b+c b+c b a+b+c b+2c a+c a+c"), 3),
        (0, 2) => rho_to_chi(parse_figure(
            &words("a a+b+c+d 2a+b+c+d b+c+d b+c+d d a+b+c+d a+b+c+2d a+b+c a+b+c"),
            4,
        )),
        _ => parse_figure(&words("a c+d a+c+d b+c b+d b c+d b+c+d a+c a+d"), 4),
    }
}

/// Standard-basis edge-to-vertex map for roles `p < q`.
pub(crate) fn edge_to_vertex(sup: StabilizerType, p: u8, q: u8, ascending: bool) -> Vec<Vec<i64>> {
    let mut rows = match sup {
        StabilizerType::Delta22m(m) => return delta22m(m, p, q, ascending),
        StabilizerType::Delta234 => return delta234(p, q, ascending),
        StabilizerType::Delta222 => delta222(p, q),
        StabilizerType::Delta233 => delta233(p, q),
        StabilizerType::Delta235 => delta235(p, q),
        other => unreachable!("{other} is not a vertex type"),
    };
    // Only one order case is printed for these types. Reversing the
    // generators of a `D_2` edge exchanges its characters χ₃ and χ₄; for odd
    // `m` it changes nothing.
    if !ascending && crate::key::role_exponent(&sup, p, q) == Some(2) {
        for r in &mut rows {
            r.swap(2, 3);
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms_parse() {
        assert_eq!(parse_form("a", 3), [1, 0, 0]);
        assert_eq!(parse_form("2a+b-c", 3), [2, 1, -1]);
        assert_eq!(parse_form("a+b+c+2d", 4), [1, 1, 1, 2]);
    }

    #[test]
    fn rho_order_is_converted() {
        // ρ₁₂ is the character −1 on the second generator only, i.e. χ₄.
        assert_eq!(rho_to_chi(vec![vec![1, 2, 3, 4]]), vec![vec![1, 4, 3, 2]]);
    }
}
