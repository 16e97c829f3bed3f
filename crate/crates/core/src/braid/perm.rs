use std::fmt;

/// A permutation of the strands `{1, …, n}` (stored 0-based).
///
/// `images[j]` is the final position of the strand that starts at position
/// `j`, reading the word left to right. With this convention the permutation
/// of a concatenation `u·v` is `perm(v) ∘ perm(u)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Returns `None` unless `images` is a bijection of `0..n`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Permutation { images })
    }

    pub(crate) fn of_word(n: usize, letters: &[i32]) -> Self {
        // strand_at[pos] = strand currently occupying position pos
        let mut strand_at: Vec<usize> = (0..n).collect();
        for &l in letters {
            let k = l.unsigned_abs() as usize - 1;
            strand_at.swap(k, k + 1);
        }
        let mut images = vec![0; n];
        for (pos, &strand) in strand_at.iter().enumerate() {
            images[strand] = pos;
        }
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, j: usize) -> usize {
        self.images[j]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&j| self.images[j]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (j, &i) in self.images.iter().enumerate() {
            images[i] = j;
        }
        Permutation { images }
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j);
                j = self.images[j];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    pub fn is_full_cycle(&self) -> bool {
        !self.images.is_empty() && self.cycle_count() == 1
    }

    /// A positive word in which every pair of strands crosses at most once and
    /// whose underlying permutation is `self` (bubble sort on target positions).
    pub fn permutation_braid_letters(&self) -> Vec<i32> {
        let mut seq = self.images.clone();
        let mut letters = Vec::new();
        let n = seq.len();
        loop {
            let mut swapped = false;
            for k in 0..n.saturating_sub(1) {
                if seq[k] > seq[k + 1] {
                    seq.swap(k, k + 1);
                    letters.push(k as i32 + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        letters
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}
