//! Brute-force realisation of small Coxeter groups as matrix groups, used to
//! check character tables and induction matrices independently of the
//! closed-form data in the library.

#![allow(dead_code)]

use std::collections::HashMap;

use repring::{CharacterTable, StabilizerType};

type Mat = Vec<Vec<f64>>;
type Key = Vec<i64>;

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect()
}

fn key(m: &Mat) -> Key {
    m.iter()
        .flatten()
        .map(|x| (x * 1e6).round() as i64)
        .collect()
}

/// A finite Coxeter group in its reflection representation, with every
/// element tagged by a reduced word and its conjugacy class.
pub struct Group {
    pub gens: Vec<Mat>,
    pub elements: Vec<(Mat, Vec<u8>)>,
    index: HashMap<Key, usize>,
    class_of: Vec<usize>,
    pub class_count: usize,
}

impl Group {
    /// Generators `0..rank` with `m(a, b)` given for some pairs (others 2).
    pub fn coxeter(rank: usize, pairs: &[(u8, u8, u32)]) -> Group {
        let n = rank.max(1);
        let mut b = identity(n);
        for a in 0..rank {
            for c in 0..rank {
                if a != c {
                    b[a][c] = -(std::f64::consts::PI / 2.0).cos();
                }
            }
        }
        for &(x, y, m) in pairs {
            let v = -(std::f64::consts::PI / f64::from(m)).cos();
            b[x as usize][y as usize] = v;
            b[y as usize][x as usize] = v;
        }
        let gens: Vec<Mat> = (0..rank)
            .map(|a| {
                let mut s = identity(n);
                for x in 0..n {
                    s[a][x] -= 2.0 * b[a][x];
                }
                s
            })
            .collect();
        let mut elements = vec![(identity(n), Vec::new())];
        let mut index = HashMap::from([(key(&elements[0].0), 0)]);
        let mut frontier = vec![0];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for e in frontier {
                for (a, g) in gens.iter().enumerate() {
                    let m = mat_mul(&elements[e].0, g);
                    let k = key(&m);
                    if !index.contains_key(&k) {
                        let mut w = elements[e].1.clone();
                        w.push(a as u8);
                        index.insert(k, elements.len());
                        next.push(elements.len());
                        elements.push((m, w));
                    }
                }
            }
            frontier = next;
        }
        // Conjugacy classes: conjugating by generators suffices to close orbits.
        let mut class_of = vec![usize::MAX; elements.len()];
        let mut class_count = 0;
        for start in 0..elements.len() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            class_of[start] = class_count;
            while let Some(e) = stack.pop() {
                for g in &gens {
                    let c = mat_mul(&mat_mul(g, &elements[e].0), g);
                    let i = index[&key(&c)];
                    if class_of[i] == usize::MAX {
                        class_of[i] = class_count;
                        stack.push(i);
                    }
                }
            }
            class_count += 1;
        }
        Group {
            gens,
            elements,
            index,
            class_of,
            class_count,
        }
    }

    /// The group generated by the standard generators of a stabilizer type,
    /// with the role conventions of the character tables.
    pub fn of(t: &StabilizerType) -> Group {
        match *t {
            StabilizerType::Trivial => Group::coxeter(0, &[]),
            StabilizerType::C2 => Group::coxeter(1, &[]),
            StabilizerType::Dm(m) => Group::coxeter(2, &[(0, 1, m)]),
            StabilizerType::Delta222 => Group::coxeter(3, &[]),
            StabilizerType::Delta22m(m) => Group::coxeter(3, &[(1, 2, m)]),
            StabilizerType::Delta233 => Group::coxeter(3, &[(0, 1, 3), (1, 2, 3)]),
            StabilizerType::Delta234 => Group::coxeter(3, &[(0, 1, 3), (1, 2, 4)]),
            StabilizerType::Delta235 => Group::coxeter(3, &[(0, 1, 3), (1, 2, 5)]),
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn word_element(&self, word: &[u8]) -> usize {
        let n = self.elements[0].0.len();
        let m = word
            .iter()
            .fold(identity(n), |acc, &a| mat_mul(&acc, &self.gens[a as usize]));
        self.index[&key(&m)]
    }

    pub fn class_of_word(&self, word: &[u8]) -> usize {
        self.class_of[self.word_element(word)]
    }

    pub fn class_size(&self, class: usize) -> usize {
        self.class_of.iter().filter(|&&c| c == class).count()
    }
}

/// A character table attached to a realised group.
pub struct Realized<'a> {
    pub group: Group,
    pub table: &'a CharacterTable,
    /// Table column of each group class.
    column: Vec<usize>,
}

impl<'a> Realized<'a> {
    /// Checks that the class representatives of `table` hit every class of
    /// the group exactly once with the stated sizes.
    pub fn new(table: &'a CharacterTable) -> Result<Realized<'a>, String> {
        let group = Group::of(&table.stype);
        if group.class_count != table.classes.len() {
            return Err(format!(
                "{}: {} classes in the group, {} in the table",
                table.stype,
                group.class_count,
                table.classes.len()
            ));
        }
        let mut column = vec![usize::MAX; group.class_count];
        for (col, rep) in table.classes.iter().enumerate() {
            let c = group.class_of_word(&rep.word);
            if column[c] != usize::MAX {
                return Err(format!(
                    "{}: class of {} listed twice",
                    table.stype,
                    rep.label()
                ));
            }
            column[c] = col;
            let size = group.class_size(c) as u64;
            if size != rep.size {
                return Err(format!(
                    "{}: class of {} has size {}, table says {}",
                    table.stype,
                    rep.label(),
                    size,
                    rep.size
                ));
            }
        }
        Ok(Realized {
            group,
            table,
            column,
        })
    }

    /// Values of every irreducible character at the element spelled `word`.
    pub fn values_at(&self, word: &[u8]) -> Vec<f64> {
        let col = self.column[self.group.class_of_word(word)];
        self.table.values.iter().map(|row| row[col]).collect()
    }
}

/// Frobenius-reciprocity induction matrix from `h` to `g`: entry `(ψ, θ)` is
/// the multiplicity of the `g`-irreducible `ψ` in the induction of the
/// `h`-irreducible `θ`. `sub[a]` is the `g`-generator that the `a`-th
/// generator of `h` maps to.
pub fn induction_oracle(g: &Realized, h: &Realized, sub: &[u8]) -> Vec<Vec<f64>> {
    let ng = g.table.values.len();
    let nh = h.table.values.len();
    let mut out = vec![vec![0.0; nh]; ng];
    for (_, word) in &h.group.elements {
        let hv = h.values_at(word);
        let image: Vec<u8> = word.iter().map(|&a| sub[a as usize]).collect();
        let gv = g.values_at(&image);
        for (i, x) in gv.iter().enumerate() {
            for (j, y) in hv.iter().enumerate() {
                out[i][j] += x * y;
            }
        }
    }
    let order = h.group.order() as f64;
    for row in &mut out {
        for x in row.iter_mut() {
            *x /= order;
        }
    }
    out
}
