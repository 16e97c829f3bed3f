//! Braid words in the Artin presentation of `B_n`.
//!
//! A word is stored as a flat sequence of signed generator indices: `+i` is
//! `σ_i`, `-i` is `σ_i⁻¹`. Nothing is freely reduced on construction, so
//! positions inside a word stay stable while a move script edits it.

mod garside;
mod parse;
mod perm;
mod twist;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use garside::NormalForm;
pub use parse::parse_braid;
pub use perm::Permutation;
pub use twist::{apply_square_insertions, delta_square_script, full_twist, half_twist, SquareInsertion};

use crate::error::BraidError;

/// Sign of a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// A single Artin generator `σ_i^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Generator {
    /// 1-based index, in `[1, n-1]` for the ambient `B_n`.
    pub index: usize,
    pub sign: Sign,
}

impl Generator {
    pub fn positive(index: usize) -> Self {
        Generator { index, sign: Sign::Positive }
    }

    pub fn negative(index: usize) -> Self {
        Generator { index, sign: Sign::Negative }
    }

    pub fn inverse(self) -> Self {
        Generator { index: self.index, sign: self.sign.flip() }
    }

    fn to_letter(self) -> i32 {
        let i = self.index as i32;
        match self.sign {
            Sign::Positive => i,
            Sign::Negative => -i,
        }
    }

    fn from_letter(letter: i32) -> Self {
        let index = letter.unsigned_abs() as usize;
        if letter > 0 {
            Generator::positive(index)
        } else {
            Generator::negative(index)
        }
    }
}

/// A word in the braid group on `strands` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// The empty word in `B_n`.
    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        Self::from_letters(strands, Vec::new())
    }

    /// Builds a word from signed 1-based indices (`-2` is `σ_2⁻¹`).
    pub fn from_letters(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for &l in &letters {
            let index = l.unsigned_abs() as usize;
            if l == 0 || index >= strands {
                return Err(BraidError::IndexOutOfRange { index, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn from_generators(
        strands: usize,
        gens: impl IntoIterator<Item = Generator>,
    ) -> Result<Self, BraidError> {
        Self::from_letters(strands, gens.into_iter().map(Generator::to_letter).collect())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.letters.iter().map(|&l| Generator::from_letter(l))
    }

    pub fn generator(&self, position: usize) -> Option<Generator> {
        self.letters.get(position).map(|&l| Generator::from_letter(l))
    }

    /// Sum of the signs of the letters (the writhe of the closure).
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// Permutation induced on the strands; see [`Permutation`] for the convention.
    pub fn underlying_permutation(&self) -> Permutation {
        Permutation::of_word(self.strands, &self.letters)
    }

    /// Number of components of the closure.
    pub fn closure_components(&self) -> usize {
        self.underlying_permutation().cycle_count()
    }

    pub fn is_knot(&self) -> bool {
        self.closure_components() == 1
    }

    /// Self-linking number of the transverse closure: exponent sum minus strand count.
    pub fn self_linking(&self) -> Result<i64, BraidError> {
        let components = self.closure_components();
        if components != 1 {
            return Err(BraidError::NotAKnot { components });
        }
        Ok(self.link_self_linking())
    }

    /// Same formula without the knot check; meaningful for transverse links too.
    pub fn link_self_linking(&self) -> i64 {
        self.exponent_sum() - self.strands as i64
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        self.check_strands(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn pow(&self, k: usize) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.repeat(k) }
    }

    /// Embeds the word into `B_m` for `m >= n` on the first `n` strands.
    pub fn widen(&self, strands: usize) -> Result<BraidWord, BraidError> {
        BraidWord::from_letters(strands, self.letters.clone())
    }

    /// Removes adjacent `σ_i σ_i⁻¹` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    pub fn normal_form(&self) -> NormalForm {
        NormalForm::of_word(self)
    }

    /// Decides whether two words represent the same element of `B_n`.
    pub fn equal(&self, other: &BraidWord) -> Result<bool, BraidError> {
        self.check_strands(other)?;
        if self.letters == other.letters {
            return Ok(true);
        }
        if self.exponent_sum() != other.exponent_sum() {
            return Ok(false);
        }
        if self.free_reduce().letters == other.free_reduce().letters {
            return Ok(true);
        }
        Ok(self.normal_form() == other.normal_form())
    }

    /// `c · self · c⁻¹`.
    pub fn conjugate(&self, c: &BraidWord) -> Result<BraidWord, BraidError> {
        self.check_strands(c)?;
        let mut letters = c.letters.clone();
        letters.extend_from_slice(&self.letters);
        letters.extend(c.letters.iter().rev().map(|l| -l));
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Moves the first `k` letters (mod length) to the end. This is conjugation
    /// by the inverse of that prefix, so the closure is unchanged.
    pub fn cyclic_permute(&self, k: i64) -> BraidWord {
        let len = self.letters.len();
        if len == 0 {
            return self.clone();
        }
        let shift = k.rem_euclid(len as i64) as usize;
        let mut letters = self.letters[shift..].to_vec();
        letters.extend_from_slice(&self.letters[..shift]);
        BraidWord { strands: self.strands, letters }
    }

    /// `B_n → B_{n+1}`, appending `σ_n^{±1}`.
    pub fn markov_stabilize(&self, sign: Sign) -> BraidWord {
        let n = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(match sign {
            Sign::Positive => n,
            Sign::Negative => -n,
        });
        BraidWord { strands: self.strands + 1, letters }
    }

    /// Positive Markov destabilization, up to conjugation.
    ///
    /// The outermost generator `σ_{n-1}` must occur exactly once, positively;
    /// writing the word as `u σ_{n-1} v` the result is `v u` in `B_{n-1}`.
    /// When `σ_{n-1}` does not qualify but `σ_1` does, the first strand is
    /// removed instead (conjugate by the half twist, destabilize, conjugate
    /// back), which shifts every remaining index down by one.
    pub fn markov_destabilize(&self) -> Result<BraidWord, BraidError> {
        let n = self.strands;
        if n < 2 {
            return Err(BraidError::Destabilization(
                "a braid on one strand cannot be destabilized".into(),
            ));
        }
        let last = (n - 1) as i32;
        match self.lone_positive_occurrence(last) {
            Ok(pos) => {
                let mut letters = self.letters[pos + 1..].to_vec();
                letters.extend_from_slice(&self.letters[..pos]);
                BraidWord::from_letters(n - 1, letters)
            }
            Err(last_reason) => {
                if n == 2 {
                    return Err(BraidError::Destabilization(last_reason));
                }
                let pos = self.lone_positive_occurrence(1).map_err(|first_reason| {
                    BraidError::Destabilization(format!("{last_reason}; {first_reason}"))
                })?;
                let shift = |l: &i32| l - l.signum();
                let mut letters: Vec<i32> = self.letters[pos + 1..].iter().map(shift).collect();
                letters.extend(self.letters[..pos].iter().map(shift));
                BraidWord::from_letters(n - 1, letters)
            }
        }
    }

    fn lone_positive_occurrence(&self, index: i32) -> Result<usize, String> {
        let hits: Vec<usize> = self
            .letters
            .iter()
            .enumerate()
            .filter(|(_, l)| l.abs() == index)
            .map(|(p, _)| p)
            .collect();
        match hits.as_slice() {
            [p] if self.letters[*p] > 0 => Ok(*p),
            [_] => Err(format!("σ_{index} occurs once but negatively")),
            _ => Err(format!("σ_{index} occurs {} times", hits.len())),
        }
    }

    fn check_strands(&self, other: &BraidWord) -> Result<(), BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch { left: self.strands, right: other.strands });
        }
        Ok(())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::print_braid(self))
    }
}
