//! Counts conjugacy classes of finite-order elements of a Coxeter group from
//! its finite parabolic subgroups alone, without the cell complex or any
//! closed formula.
//!
//! Every finite-order element is conjugate into some finite parabolic `W_K`
//! and, choosing `K` minimal, to an element fixing no nonzero vector of the
//! reflection representation of `W_K`. Two such pairs `(K, class)` give
//! conjugate elements exactly when they are linked by a chain of moves: for
//! `K ⊊ L` with `W_L` finite, conjugation by the longest element of `W_L`
//! carries `W_K` onto a parabolic `W_K'` and a class onto a class.

#![allow(dead_code)]

use itertools::Itertools;
use polyhedron::CoxeterMatrix;

use crate::groups::Group;

struct Parabolic {
    faces: Vec<usize>,
    group: Group,
    /// Union-find node per conjugacy class; `None` if the class fixes a line.
    nodes: Vec<Option<usize>>,
}

fn det(mut a: Vec<Vec<f64>>) -> f64 {
    let n = a.len();
    let mut d = 1.0;
    for c in 0..n {
        let p = (c..n)
            .max_by(|&x, &y| a[x][c].abs().total_cmp(&a[y][c].abs()))
            .unwrap();
        if a[p][c].abs() < 1e-12 {
            return 0.0;
        }
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= a[c][c];
        for r in c + 1..n {
            let f = a[r][c] / a[c][c];
            for k in c..n {
                a[r][k] -= f * a[c][k];
            }
        }
    }
    d
}

fn fixes_no_line(m: &[Vec<f64>]) -> bool {
    let shifted = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, x)| x - f64::from(u8::from(i == j)))
                .collect()
        })
        .collect();
    det(shifted).abs() > 1e-3
}

fn spherical(cm: &CoxeterMatrix, k: &[usize]) -> bool {
    let ms: Option<Vec<u32>> = k
        .iter()
        .tuple_combinations()
        .map(|(&a, &b)| cm.m(a, b))
        .collect();
    match ms.as_deref() {
        None => false,
        Some([p, q, r]) => 1.0 / f64::from(*p) + 1.0 / f64::from(*q) + 1.0 / f64::from(*r) > 1.0,
        Some(_) => k.len() <= 2,
    }
}

fn find(p: &mut [usize], mut x: usize) -> usize {
    while p[x] != x {
        p[x] = p[p[x]];
        x = p[x];
    }
    x
}

/// The number of conjugacy classes of nontrivial and trivial finite-order
/// elements of the Coxeter group of `cm` (faces numbered from 1).
pub fn finite_order_classes(cm: &CoxeterMatrix) -> usize {
    let mut parabolics = Vec::new();
    let mut node_count = 0;
    for size in 0..=3 {
        for k in (1..=cm.n()).combinations(size) {
            if !spherical(cm, &k) {
                continue;
            }
            let pairs: Vec<(u8, u8, u32)> = (0..size)
                .tuple_combinations()
                .map(|(a, b)| (a as u8, b as u8, cm.m(k[a], k[b]).unwrap()))
                .collect();
            let group = Group::coxeter(size, &pairs);
            let mut nodes = vec![None; group.class_count];
            for (mat, word) in &group.elements {
                let c = group.class_of_word(word);
                if nodes[c].is_none() && (size == 0 || fixes_no_line(mat)) {
                    nodes[c] = Some(node_count);
                    node_count += 1;
                }
            }
            parabolics.push(Parabolic {
                faces: k,
                group,
                nodes,
            });
        }
    }
    let mut parent: Vec<usize> = (0..node_count).collect();
    let position = |faces: &[usize]| parabolics.iter().position(|p| p.faces == faces).unwrap();
    for l in &parabolics {
        let w0 = &l
            .group
            .elements
            .iter()
            .max_by_key(|(_, w)| w.len())
            .unwrap()
            .1;
        let local = |face: usize| l.faces.iter().position(|&f| f == face).unwrap() as u8;
        for k in parabolics.iter().filter(|k| k.faces.len() < l.faces.len()) {
            if !k.faces.iter().all(|f| l.faces.contains(f)) {
                continue;
            }
            let conjugate = |word: &[u8]| -> Vec<u8> {
                let full: Vec<u8> = w0
                    .iter()
                    .copied()
                    .chain(word.iter().map(|&a| local(k.faces[a as usize])))
                    .chain(w0.iter().copied())
                    .collect();
                l.group.elements[l.group.word_element(&full)].1.clone()
            };
            let mut image: Vec<usize> = (0..k.faces.len())
                .map(|a| {
                    let w = conjugate(&[a as u8]);
                    assert_eq!(
                        w.len(),
                        1,
                        "w0 conjugates simple reflections to simple ones"
                    );
                    l.faces[w[0] as usize]
                })
                .collect();
            image.sort_unstable();
            let target = &parabolics[position(&image)];
            for (mat_word, c) in k
                .group
                .elements
                .iter()
                .map(|(_, w)| (w, k.group.class_of_word(w)))
            {
                let Some(a) = k.nodes[c] else { continue };
                let w: Vec<u8> = conjugate(mat_word)
                    .iter()
                    .map(|&x| {
                        image
                            .iter()
                            .position(|&f| f == l.faces[x as usize])
                            .unwrap() as u8
                    })
                    .collect();
                let b = target.nodes[target.group.class_of_word(&w)]
                    .expect("moves preserve classes fixing no line");
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
    }
    (0..node_count)
        .filter(|&x| find(&mut parent, x) == x)
        .count()
}
