//! Half and full twists, and square-insertion scripts that grow `σ_i²` into
//! the full twist `Δ_n²`.
//!
//! The full twist satisfies `Δ_{k+1}² = Δ_k² · (σ_k ⋯ σ_2 σ_1² σ_2 ⋯ σ_k)`, and
//! the second factor is built from `σ_k²` by nesting squares inside it:
//! `σ_k² → σ_k σ_{k-1}² σ_k → ⋯`. Unrolling this from any seed square gives
//! `n(n-1)/2 - 1` literal insertions.

use super::BraidWord;
use crate::error::BraidError;

/// Insert `σ_index σ_index` before the letter currently at `position`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SquareInsertion {
    pub position: usize,
    pub index: usize,
}

/// Positive half twist `Δ_n = σ_1 (σ_2 σ_1) ⋯ (σ_{n-1} ⋯ σ_1)`.
pub fn half_twist(n: usize) -> Result<BraidWord, BraidError> {
    let mut letters = Vec::new();
    for top in 1..n as i32 {
        letters.extend((1..=top).rev());
    }
    BraidWord::from_letters(n, letters)
}

/// Full twist `Δ_n² = (σ_1 ⋯ σ_{n-1})^n`.
pub fn full_twist(n: usize) -> Result<BraidWord, BraidError> {
    let coxeter: Vec<i32> = (1..n as i32).collect();
    BraidWord::from_letters(n, coxeter.repeat(n))
}

/// Square insertions turning the seed word `σ_i σ_i` in `B_n` into a positive
/// word equal to `Δ_n²`.
pub fn delta_square_script(n: usize, i: usize) -> Result<Vec<SquareInsertion>, BraidError> {
    if n < 2 {
        return Err(BraidError::NoStrands);
    }
    if i == 0 || i >= n {
        return Err(BraidError::IndexOutOfRange { index: i, strands: n });
    }
    let mut out = Vec::new();
    grow_from_seed(n, i, &mut out);
    Ok(out)
}

/// Applies insertions to the seed `σ_i²`.
pub fn apply_square_insertions(
    n: usize,
    seed: usize,
    script: &[SquareInsertion],
) -> Result<BraidWord, BraidError> {
    let mut letters = vec![seed as i32, seed as i32];
    for ins in script {
        if ins.position > letters.len() {
            return Err(BraidError::PositionOutOfRange { position: ins.position, len: letters.len() });
        }
        let g = ins.index as i32;
        letters.splice(ins.position..ins.position, [g, g]);
    }
    BraidWord::from_letters(n, letters)
}

// Word being built: W(2) = σ_1², W(k+1) = W(k) · F(k),
// F(k) = σ_k σ_{k-1} ⋯ σ_1 σ_1 ⋯ σ_{k-1} σ_k.

fn grow_from_seed(n: usize, i: usize, out: &mut Vec<SquareInsertion>) {
    if n == 2 {
        return;
    }
    let k = n - 1;
    if i < k {
        grow_from_seed(n - 1, i, out);
        let offset = (n - 1) * (n - 2);
        append_factor(k, offset, out);
    } else {
        // seed is the outer pair of F(k), sitting at offset 0
        nest_inside(k, 0, out);
        grow_from_nothing(n - 1, out);
    }
}

/// Builds W(m) at the front of the word.
fn grow_from_nothing(m: usize, out: &mut Vec<SquareInsertion>) {
    if m < 2 {
        return;
    }
    out.push(SquareInsertion { position: 0, index: 1 });
    for k in 2..m {
        append_factor(k, k * (k - 1), out);
    }
}

/// Builds F(k) starting at `offset`.
fn append_factor(k: usize, offset: usize, out: &mut Vec<SquareInsertion>) {
    out.push(SquareInsertion { position: offset, index: k });
    nest_inside(k, offset, out);
}

/// Given `σ_k σ_k` at `offset`, nests `σ_{k-1}², …, σ_1²` inside it.
fn nest_inside(k: usize, offset: usize, out: &mut Vec<SquareInsertion>) {
    for (depth, index) in (1..k).rev().enumerate() {
        out.push(SquareInsertion { position: offset + depth + 1, index });
    }
}
