#![allow(dead_code)]

use std::collections::BTreeMap;

use proptest::prelude::*;
use rand::Rng;

/// Random letters on `n` strands.
pub fn letters(n: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    let k = (n as i32 - 1).max(1);
    prop::collection::vec((1..=k, any::<bool>()).prop_map(|(i, s)| if s { i } else { -i }), 0..=max_len)
}

/// Applies one relation of the braid group somewhere in the word, or inserts
/// a cancelling pair when nothing matches.
pub fn rewrite_once(n: usize, w: &mut Vec<i32>, rng: &mut impl Rng) {
    let k = n as i32 - 1;
    if k < 1 {
        return;
    }
    for _ in 0..8 {
        match rng.gen_range(0..4) {
            0 => {
                let pos = rng.gen_range(0..=w.len());
                let g = rng.gen_range(1..=k) * if rng.gen() { 1 } else { -1 };
                w.splice(pos..pos, [g, -g]);
                return;
            }
            1 => {
                let hits: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&i| w[i] == -w[i + 1]).collect();
                if let Some(&i) = pick(&hits, rng) {
                    w.drain(i..i + 2);
                    return;
                }
            }
            2 => {
                let hits: Vec<usize> =
                    (0..w.len().saturating_sub(1)).filter(|&i| (w[i].abs() - w[i + 1].abs()).abs() >= 2).collect();
                if let Some(&i) = pick(&hits, rng) {
                    w.swap(i, i + 1);
                    return;
                }
            }
            _ => {
                let hits: Vec<usize> = (0..w.len().saturating_sub(2))
                    .filter(|&i| {
                        let (a, b, c) = (w[i], w[i + 1], w[i + 2]);
                        a == c && (a.abs() - b.abs()).abs() == 1 && a.signum() == b.signum()
                    })
                    .collect();
                if let Some(&i) = pick(&hits, rng) {
                    let (a, b) = (w[i], w[i + 1]);
                    w[i..i + 3].copy_from_slice(&[b, a, b]);
                    return;
                }
            }
        }
    }
}

fn pick<'a, T>(v: &'a [T], rng: &mut impl Rng) -> Option<&'a T> {
    if v.is_empty() {
        None
    } else {
        Some(&v[rng.gen_range(0..v.len())])
    }
}

/// Laurent polynomial in `t`, exponent -> coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Laurent(BTreeMap<i32, i64>);

impl Laurent {
    pub fn monomial(e: i32, c: i64) -> Self {
        let mut m = BTreeMap::new();
        if c != 0 {
            m.insert(e, c);
        }
        Laurent(m)
    }

    fn add(&self, o: &Laurent) -> Laurent {
        let mut m = self.0.clone();
        for (&e, &c) in &o.0 {
            *m.entry(e).or_insert(0) += c;
        }
        m.retain(|_, c| *c != 0);
        Laurent(m)
    }

    fn mul(&self, o: &Laurent) -> Laurent {
        let mut m = BTreeMap::new();
        for (&e1, &c1) in &self.0 {
            for (&e2, &c2) in &o.0 {
                *m.entry(e1 + e2).or_insert(0) += c1 * c2;
            }
        }
        m.retain(|_, c: &mut i64| *c != 0);
        Laurent(m)
    }
}

pub type Matrix = Vec<Vec<Laurent>>;

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| Laurent::monomial(0, (i == j) as i64)).collect()).collect()
}

fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n).map(|j| (0..n).fold(Laurent::default(), |acc, k| acc.add(&a[i][k].mul(&b[k][j])))).collect()
        })
        .collect()
}

/// Unreduced Burau representation; faithful on `B_3`.
pub fn burau(n: usize, word: &[i32]) -> Matrix {
    let mut m = identity(n);
    for &l in word {
        let i = l.unsigned_abs() as usize - 1;
        let mut g = identity(n);
        if l > 0 {
            g[i][i] = Laurent::monomial(0, 1).add(&Laurent::monomial(1, -1));
            g[i][i + 1] = Laurent::monomial(1, 1);
            g[i + 1][i] = Laurent::monomial(0, 1);
            g[i + 1][i + 1] = Laurent::default();
        } else {
            g[i][i] = Laurent::default();
            g[i][i + 1] = Laurent::monomial(0, 1);
            g[i + 1][i] = Laurent::monomial(-1, 1);
            g[i + 1][i + 1] = Laurent::monomial(0, 1).add(&Laurent::monomial(-1, -1));
        }
        m = matmul(&m, &g);
    }
    m
}
