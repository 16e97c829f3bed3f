//! Scripted cobordisms from an arbitrary braided knot up to a torus knot.
//!
//! After conjugating so the permutation is that of `β₀ = σ_1 ⋯ σ_{n-1}`, the
//! word is `β₀ γ` with `γ` a pure braid. Combing `γ` through the positive
//! permutation braids writes it as a product of conjugates `u σ_k^{±2} u⁻¹`.
//! Negative factors die with one crossing change each. Positive ones are grown
//! into conjugates of `Δ²` by square insertions, each realised as a free
//! `σ_j⁻¹ σ_j` insertion followed by a crossing change. Since `Δ²` is central,
//! the result is `β₀ Δ^{2m}`, whose closure is `T(n, mn + 1)`.

use super::script::{Move, MoveScript};
use crate::braid::{delta_square_script, full_twist, BraidWord, Permutation, Sign};
use crate::error::BraidError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusScript {
    pub script: MoveScript,
    /// Number of full twists `m` in the final word.
    pub full_twists: usize,
    /// `(n, m n + 1)`
    pub torus_type: (usize, usize),
}

struct PureFactor {
    conjugator: Vec<i32>,
    index: i32,
    sign: Sign,
}

fn coxeter(n: usize) -> Vec<i32> {
    (1..n as i32).collect()
}

/// Permutation braid `T(π)` for a strand-tracking permutation.
fn transversal(p: &Permutation) -> Vec<i32> {
    p.permutation_braid_letters()
}

/// Writes the pure braid `letters` as a product of `u σ_k^{±2} u⁻¹`.
fn comb(n: usize, letters: &[i32]) -> Vec<PureFactor> {
    let mut strand_at: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    for &l in letters {
        let k = l.unsigned_abs() as usize - 1;
        let fresh = strand_at[k] < strand_at[k + 1];
        let before = positions(&strand_at);
        strand_at.swap(k, k + 1);
        let after = positions(&strand_at);
        match (l > 0, fresh) {
            (true, false) => out.push(PureFactor {
                conjugator: transversal(&after),
                index: l,
                sign: Sign::Positive,
            }),
            (false, true) => out.push(PureFactor {
                conjugator: transversal(&before),
                index: -l,
                sign: Sign::Negative,
            }),
            _ => {}
        }
    }
    out
}

fn positions(strand_at: &[usize]) -> Permutation {
    let mut images = vec![0; strand_at.len()];
    for (pos, &s) in strand_at.iter().enumerate() {
        images[s] = pos;
    }
    Permutation::from_images(images).expect("strand table is a bijection")
}

/// Builds a script from the closure of `word` to a torus knot `T(n, mn+1)`.
/// Every band comes from a crossing change, so the genus in the ledger equals
/// the number of `cc` moves.
pub fn to_torus_script(word: &BraidWord) -> Result<TorusScript, BraidError> {
    let n = word.strands();
    let components = word.closure_components();
    if components != 1 {
        return Err(BraidError::NotAKnot { components });
    }
    let mut script = MoveScript::new(word.clone());
    if n == 1 {
        script.declared_end = Some(word.clone());
        return Ok(TorusScript { script, full_twists: 0, torus_type: (1, 1) });
    }

    let base = BraidWord::from_letters(n, coxeter(n))?;
    let target_perm = base.underlying_permutation();
    let own = word.underlying_permutation();
    // tau maps the cycle of `own` through 0 onto that of `target_perm`
    let mut tau = vec![0usize; n];
    let (mut a, mut b) = (0usize, 0usize);
    for _ in 0..n {
        tau[a] = b;
        a = own.apply(a);
        b = target_perm.apply(b);
    }
    let tau = Permutation::from_images(tau).expect("both permutations are n-cycles");
    let c = BraidWord::from_letters(n, transversal(&tau.inverse()))?;
    let mut current = word.clone();
    if !c.is_empty() {
        current = current.conjugate(&c)?;
        script.moves.push(Move::Conjugate(c));
    }
    debug_assert_eq!(current.underlying_permutation(), target_perm);

    let gamma = base.inverse().concat(&current)?.free_reduce();
    let factors = comb(n, gamma.letters());

    let mut letters = coxeter(n);
    for f in &factors {
        letters.extend_from_slice(&f.conjugator);
        let s = match f.sign {
            Sign::Positive => f.index,
            Sign::Negative => -f.index,
        };
        letters.extend([s, s]);
        letters.extend(f.conjugator.iter().rev().map(|l| -l));
    }
    let combed = BraidWord::from_letters(n, letters)?;
    if combed.letters() != current.letters() {
        script.moves.push(Move::RewriteEqual(combed.clone()));
    }
    current = combed;

    let mut offset = n - 1;
    let mut twists = 0usize;
    for f in &factors {
        let len_u = f.conjugator.len();
        match f.sign {
            Sign::Negative => {
                let p = offset + len_u + 1;
                script.moves.push(Move::CrossingChange { position: p, index: f.index as usize });
                let mut letters = current.letters().to_vec();
                letters[p] = f.index;
                current = BraidWord::from_letters(n, letters)?;
                offset += 2 * len_u + 2;
            }
            Sign::Positive => {
                let seed = offset + len_u;
                for ins in delta_square_script(n, f.index as usize)? {
                    let p = seed + ins.position;
                    let j = ins.index as i32;
                    let mut letters = current.letters().to_vec();
                    letters.splice(p..p, [-j, j]);
                    current = BraidWord::from_letters(n, letters)?;
                    script.moves.push(Move::RewriteEqual(current.clone()));
                    script.moves.push(Move::CrossingChange { position: p, index: ins.index });
                    let mut letters = current.letters().to_vec();
                    letters[p] = j;
                    current = BraidWord::from_letters(n, letters)?;
                }
                offset += 2 * len_u + n * (n - 1);
                twists += 1;
            }
        }
    }

    let end = base.concat(&full_twist(n)?.pow(twists))?;
    if end.letters() != current.letters() {
        script.moves.push(Move::RewriteEqual(end.clone()));
    }
    script.declared_end = Some(end);
    Ok(TorusScript { script, full_twists: twists, torus_type: (n, twists * n + 1) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;
    use crate::cobordism::run_script;

    fn check(text: &str, n: usize) -> TorusScript {
        let w = parse_braid(text, n).unwrap();
        let t = to_torus_script(&w).unwrap();
        let r = run_script(&t.script).unwrap();
        assert_eq!(r.ledger.genus, Some(r.ledger.crossing_changes));
        assert_eq!(r.ledger.insertions, 0);
        t
    }

    #[test]
    fn b2_negative_generator() {
        let t = check("X", 2);
        assert_eq!(t.full_twists, 0);
        assert_eq!(t.torus_type, (2, 1));
        assert_eq!(t.script.to_text(), "strands: 2\nstart: X\neq xX^2\ncc 2 x\neq x\nend: x\n");
    }

    #[test]
    fn b2_positive_power() {
        let t = check("x^5", 2);
        assert_eq!(t.torus_type, (2, 5));
    }

    #[test]
    fn b3_examples() {
        for text in ["x^3yX^3y", "xYxY", "Xy", "xyxyxyxy", "yx", "XYXYxxy"] {
            let w = parse_braid(text, 3).unwrap();
            if w.is_knot() {
                check(text, 3);
            }
        }
    }

    #[test]
    fn b4_and_b5_examples() {
        check("xYxYzyXyz", 4);
        check("X^3yx^3yzYz", 4);
        check("xYxyzwYwzyZWyZ", 5);
    }

    #[test]
    fn positive_generator_needs_no_moves() {
        assert!(check("x", 2).script.moves.is_empty());
    }

    #[test]
    fn rejects_links() {
        assert!(to_torus_script(&parse_braid("xx", 2).unwrap()).is_err());
    }

    #[test]
    fn trivial_braid_on_one_strand() {
        let t = check("", 1);
        assert_eq!(t.torus_type, (1, 1));
        assert!(t.script.moves.is_empty());
    }
}
