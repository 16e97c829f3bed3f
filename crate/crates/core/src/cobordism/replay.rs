use serde::Serialize;

use super::script::{Move, MoveScript};
use crate::braid::{BraidWord, Sign};
use crate::error::{BraidError, ScriptError};

/// Bookkeeping for the surface traced out by a replayed script.
///
/// Each `ins` is one band and each `cc` is two, so the cobordism has Euler
/// characteristic `-bands`; between knots its genus is `bands / 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CobordismLedger {
    pub bands: u64,
    pub insertions: u64,
    pub crossing_changes: u64,
    pub negative_stabilizations: u64,
    pub stabilized: bool,
    pub euler: i64,
    pub genus: Option<u64>,
    pub slk_start: i64,
    pub slk_end: i64,
    /// Closure component count before the first move and after each move.
    pub component_trace: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Replay {
    pub end: BraidWord,
    pub ledger: CobordismLedger,
}

fn apply(word: &BraidWord, mv: &Move) -> Result<BraidWord, String> {
    let n = word.strands();
    let check_index = |index: usize| {
        if index == 0 || index >= n {
            Err(BraidError::IndexOutOfRange { index, strands: n }.to_string())
        } else {
            Ok(())
        }
    };
    match mv {
        Move::InsertPositive { position, index } => {
            check_index(*index)?;
            if *position > word.len() {
                return Err(BraidError::PositionOutOfRange { position: *position, len: word.len() }.to_string());
            }
            let mut letters = word.letters().to_vec();
            letters.insert(*position, *index as i32);
            BraidWord::from_letters(n, letters).map_err(|e| e.to_string())
        }
        Move::CrossingChange { position, index } => {
            check_index(*index)?;
            let found = word
                .letters()
                .get(*position)
                .ok_or_else(|| BraidError::PositionOutOfRange { position: *position, len: word.len() }.to_string())?;
            if *found != -(*index as i32) {
                let expected = BraidWord::from_letters(n, vec![-(*index as i32)]).map_err(|e| e.to_string())?;
                let actual = BraidWord::from_letters(n, vec![*found]).map_err(|e| e.to_string())?;
                return Err(format!("expected {expected} at position {position}, found {actual}"));
            }
            let mut letters = word.letters().to_vec();
            letters[*position] = *index as i32;
            BraidWord::from_letters(n, letters).map_err(|e| e.to_string())
        }
        Move::Conjugate(c) => word.conjugate(c).map_err(|e| e.to_string()),
        Move::CyclicPermute(k) => Ok(word.cyclic_permute(*k)),
        Move::RewriteEqual(target) => match word.equal(target) {
            Ok(true) => Ok(target.clone()),
            Ok(false) => Err(format!("{target} is not equal to the current word {word}")),
            Err(e) => Err(e.to_string()),
        },
        Move::MarkovStabilize(sign) => Ok(word.markov_stabilize(*sign)),
        Move::MarkovDestabilize => word.markov_destabilize().map_err(|e| e.to_string()),
    }
}

/// Replays every move, checking its precondition, and returns the final word
/// with the ledger. Fails at the first illegal move or if the final word is
/// not equal to the declared end.
pub fn run_script(script: &MoveScript) -> Result<Replay, ScriptError> {
    let mut word = script.start.clone();
    let mut ledger = CobordismLedger {
        bands: 0,
        insertions: 0,
        crossing_changes: 0,
        negative_stabilizations: 0,
        stabilized: false,
        euler: 0,
        genus: None,
        slk_start: word.link_self_linking(),
        slk_end: 0,
        component_trace: vec![word.closure_components()],
    };
    let profile = script.strand_profile();

    for (step, mv) in script.moves.iter().enumerate() {
        word = apply(&word, mv).map_err(|reason| ScriptError::Step {
            step: step + 1,
            text: mv.to_line(profile[step]),
            reason,
        })?;
        match mv {
            Move::InsertPositive { .. } => {
                ledger.bands += 1;
                ledger.insertions += 1;
            }
            Move::CrossingChange { .. } => {
                ledger.bands += 2;
                ledger.crossing_changes += 1;
            }
            Move::MarkovStabilize(Sign::Negative) => {
                ledger.negative_stabilizations += 1;
                ledger.stabilized = true;
            }
            _ => {}
        }
        ledger.component_trace.push(word.closure_components());
    }

    if let Some(declared) = &script.declared_end {
        let same = declared.strands() == word.strands() && word.equal(declared).unwrap_or(false);
        if !same {
            return Err(ScriptError::EndMismatch { actual: word.to_string(), declared: declared.to_string() });
        }
    }

    ledger.slk_end = word.link_self_linking();
    ledger.euler = -(ledger.bands as i64);
    let expected_change = ledger.bands as i64 - 2 * ledger.negative_stabilizations as i64;
    if ledger.slk_end - ledger.slk_start != expected_change {
        return Err(ScriptError::Ledger(format!(
            "self-linking moved by {} but the moves account for {expected_change}",
            ledger.slk_end - ledger.slk_start
        )));
    }
    let knot_to_knot = ledger.component_trace.first() == Some(&1) && ledger.component_trace.last() == Some(&1);
    if knot_to_knot {
        if !ledger.bands.is_multiple_of(2) {
            return Err(ScriptError::Ledger(format!("odd band count {} between knots", ledger.bands)));
        }
        ledger.genus = Some(ledger.bands / 2);
    }
    Ok(Replay { end: word, ledger })
}
