//! Left normal form `Δ^inf · A_1 ⋯ A_k` over permutation braids.
//!
//! A permutation braid (simple element) is stored as the permutation
//! `s_{i1} ∘ s_{i2} ∘ ⋯` of any positive word for it, so right multiplication
//! by `σ_k` swaps entries `k, k+1` and left multiplication swaps values.
//! Consecutive factors are kept left-weighted: the starting set of each
//! factor lies inside the finishing set of its predecessor.

use super::BraidWord;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Simple(Vec<u8>);

impl Simple {
    fn identity(n: usize) -> Self {
        Simple((0..n as u8).collect())
    }

    fn delta(n: usize) -> Self {
        Simple((0..n as u8).rev().collect())
    }

    fn generator(n: usize, k: usize) -> Self {
        let mut s = Self::identity(n);
        s.0.swap(k, k + 1);
        s
    }

    /// `Δ σ_k⁻¹`
    fn delta_over_generator(n: usize, k: usize) -> Self {
        let mut s = Self::delta(n);
        s.0.swap(k, k + 1);
        s
    }

    fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    fn is_delta(&self) -> bool {
        let n = self.0.len();
        self.0.iter().enumerate().all(|(i, &v)| v as usize == n - 1 - i)
    }

    /// `A = A' σ_k` with `A'` simple.
    fn finishes_with(&self, k: usize) -> bool {
        self.0[k] > self.0[k + 1]
    }

    /// `A = σ_k A'` with `A'` simple.
    fn starts_with(&self, k: usize) -> bool {
        let pos_k = self.0.iter().position(|&v| v as usize == k).unwrap();
        let pos_k1 = self.0.iter().position(|&v| v as usize == k + 1).unwrap();
        pos_k > pos_k1
    }

    /// Conjugation by the half twist, `σ_k ↦ σ_{n-k}`.
    fn flip(&self) -> Self {
        let n = self.0.len();
        let m = (n - 1) as u8;
        Simple((0..n).map(|j| m - self.0[n - 1 - j]).collect())
    }

    fn swap_values(&mut self, k: usize) {
        for v in self.0.iter_mut() {
            if *v as usize == k {
                *v = (k + 1) as u8;
            } else if *v as usize == k + 1 {
                *v = k as u8;
            }
        }
    }

    fn reduced_word(&self) -> Vec<usize> {
        // bubble the entries back to the identity, reading swaps in reverse
        let mut a = self.0.clone();
        let mut rev = Vec::new();
        loop {
            let mut done = true;
            for k in 0..a.len().saturating_sub(1) {
                if a[k] > a[k + 1] {
                    a.swap(k, k + 1);
                    rev.push(k);
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        rev.reverse();
        rev
    }
}

/// Makes the pair `(a, b)` left-weighted in place; returns whether it changed.
fn left_weight(a: &mut Simple, b: &mut Simple) -> bool {
    let n = a.0.len();
    let mut changed = false;
    loop {
        let step = (0..n - 1).find(|&k| b.starts_with(k) && !a.finishes_with(k));
        match step {
            Some(k) => {
                a.0.swap(k, k + 1);
                b.swap_values(k);
                changed = true;
            }
            None => return changed,
        }
    }
}

/// Canonical form of a braid-group element: two words are equal in `B_n`
/// exactly when their normal forms coincide.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    strands: usize,
    inf: i64,
    factors: Vec<Simple>,
}

impl NormalForm {
    pub fn identity(strands: usize) -> Self {
        NormalForm { strands, inf: 0, factors: Vec::new() }
    }

    pub fn of_word(word: &BraidWord) -> Self {
        let n = word.strands();
        let mut nf = NormalForm::identity(n);
        if n < 2 {
            return nf;
        }
        for &l in word.letters() {
            let k = l.unsigned_abs() as usize - 1;
            if l > 0 {
                nf.push(Simple::generator(n, k));
            } else {
                nf.inf -= 1;
                for f in nf.factors.iter_mut() {
                    *f = f.flip();
                }
                nf.push(Simple::delta_over_generator(n, k));
            }
        }
        nf
    }

    fn push(&mut self, s: Simple) {
        self.factors.push(s);
        loop {
            let mut changed = false;
            for i in (1..self.factors.len()).rev() {
                let (head, tail) = self.factors.split_at_mut(i);
                if left_weight(&mut head[i - 1], &mut tail[0]) {
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let leading = self.factors.iter().take_while(|f| f.is_delta()).count();
        if leading > 0 {
            self.inf += leading as i64;
            self.factors.drain(..leading);
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Power of the half twist in front.
    pub fn infimum(&self) -> i64 {
        self.inf
    }

    pub fn supremum(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// A word for this element: `Δ^inf` followed by a reduced word per factor.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta: Vec<i32> = Simple::delta(n).reduced_word().iter().map(|&k| k as i32 + 1).collect();
        let mut letters = Vec::new();
        for _ in 0..self.inf.max(0) {
            letters.extend_from_slice(&delta);
        }
        for _ in 0..(-self.inf).max(0) {
            letters.extend(delta.iter().rev().map(|l| -l));
        }
        for f in &self.factors {
            letters.extend(f.reduced_word().iter().map(|&k| k as i32 + 1));
        }
        BraidWord::from_letters(n, letters).expect("normal form letters are in range")
    }
}
