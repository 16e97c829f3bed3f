//! Move scripts and their line-oriented text format.
//!
//! ```text
//! strands: 3
//! start: x^3yX^3y
//! cc 5 x
//! ...
//! destab
//! end: x^5
//! ```
//!
//! Positions are 0-based indices into the current word. Lines starting with
//! `#` and blank lines are skipped.

use std::fmt;

use crate::braid::{parse_braid, BraidWord, Sign};
use crate::error::{BraidError, ScriptError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    /// Insert `σ_index` before the letter at `position`.
    InsertPositive { position: usize, index: usize },
    /// Switch the letter `σ_index⁻¹` at `position` to `σ_index`; ledgered as
    /// two inserted crossings.
    CrossingChange { position: usize, index: usize },
    /// `w ↦ c w c⁻¹`
    Conjugate(BraidWord),
    /// Rotate the first `k` letters to the end.
    CyclicPermute(i64),
    /// Replace the word by one certified equal in the braid group.
    RewriteEqual(BraidWord),
    /// `B_n → B_{n+1}`. The negative sign is transverse stabilization, not an
    /// upward cobordism, and marks the ledger as stabilized.
    MarkovStabilize(Sign),
    MarkovDestabilize,
}

impl Move {
    pub fn negative_stabilize() -> Move {
        Move::MarkovStabilize(Sign::Negative)
    }

    fn strands_after(&self, strands: usize) -> usize {
        match self {
            Move::MarkovStabilize(_) => strands + 1,
            Move::MarkovDestabilize => strands.saturating_sub(1),
            _ => strands,
        }
    }

    /// Text form of the move as it appears in a script, for `strands` strands.
    pub fn to_line(&self, strands: usize) -> String {
        let letter = |index: usize| {
            BraidWord::from_letters(strands.max(index + 1), vec![index as i32])
                .map(|w| w.to_string())
                .unwrap_or_else(|_| format!("s{index}"))
        };
        match self {
            Move::InsertPositive { position, index } => format!("ins {position} {}", letter(*index)),
            Move::CrossingChange { position, index } => format!("cc {position} {}", letter(*index)),
            Move::Conjugate(c) => format!("conj {c}"),
            Move::CyclicPermute(k) => format!("cyc {k}"),
            Move::RewriteEqual(w) => format!("eq {w}"),
            Move::MarkovStabilize(Sign::Positive) => "stab +".to_string(),
            Move::MarkovStabilize(Sign::Negative) => "stab -".to_string(),
            Move::MarkovDestabilize => "destab".to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveScript {
    pub start: BraidWord,
    pub moves: Vec<Move>,
    pub declared_end: Option<BraidWord>,
}

impl MoveScript {
    pub fn new(start: BraidWord) -> Self {
        MoveScript { start, moves: Vec::new(), declared_end: None }
    }

    /// Strand count before each move, plus the count after the last one.
    pub fn strand_profile(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.moves.len() + 1);
        let mut n = self.start.strands();
        out.push(n);
        for m in &self.moves {
            n = m.strands_after(n);
            out.push(n);
        }
        out
    }

    pub fn end_strands(&self) -> usize {
        *self.strand_profile().last().unwrap()
    }

    pub fn parse(text: &str) -> Result<MoveScript, ScriptError> {
        let mut strands: Option<usize> = None;
        let mut start: Option<BraidWord> = None;
        let mut moves = Vec::new();
        let mut declared_end = None;
        let mut current = 0usize;

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let syntax = |message: String| ScriptError::Syntax { line: line_no, message };
            let braid = |text: &str, n: usize| {
                parse_braid(text, n).map_err(|source| ScriptError::Braid { line: line_no, source })
            };
            if declared_end.is_some() {
                return Err(syntax("content after the end: footer".into()));
            }
            if let Some(rest) = line.strip_prefix("strands:") {
                if strands.is_some() {
                    return Err(syntax("duplicate strands: header".into()));
                }
                let n: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| syntax(format!("bad strand count '{}'", rest.trim())))?;
                if n == 0 {
                    return Err(syntax("strand count must be positive".into()));
                }
                strands = Some(n);
                current = n;
                continue;
            }
            let Some(n0) = strands else {
                return Err(syntax("expected strands: header first".into()));
            };
            if let Some(rest) = line.strip_prefix("start:") {
                if start.is_some() {
                    return Err(syntax("duplicate start: header".into()));
                }
                start = Some(braid(rest, n0)?);
                continue;
            }
            if start.is_none() {
                return Err(syntax("expected start: header before moves".into()));
            }
            if let Some(rest) = line.strip_prefix("end:") {
                declared_end = Some(braid(rest, current)?);
                continue;
            }

            let (keyword, rest) = match line.split_once(char::is_whitespace) {
                Some((k, r)) => (k, r.trim()),
                None => (line, ""),
            };
            let mv = match keyword {
                "ins" | "cc" => {
                    let (pos, letter) = rest
                        .split_once(char::is_whitespace)
                        .ok_or_else(|| syntax(format!("{keyword} needs a position and a letter")))?;
                    let position: usize =
                        pos.parse().map_err(|_| syntax(format!("bad position '{pos}'")))?;
                    let g = braid(letter.trim(), current)?;
                    let index = match g.letters() {
                        [l] if *l > 0 => *l as usize,
                        _ => return Err(syntax(format!("'{}' is not a single positive generator", letter.trim()))),
                    };
                    if keyword == "ins" {
                        Move::InsertPositive { position, index }
                    } else {
                        Move::CrossingChange { position, index }
                    }
                }
                "conj" => Move::Conjugate(braid(rest, current)?),
                "eq" => Move::RewriteEqual(braid(rest, current)?),
                "cyc" => Move::CyclicPermute(rest.parse().map_err(|_| syntax(format!("bad shift '{rest}'")))?),
                "stab" => match rest {
                    "+" => Move::MarkovStabilize(Sign::Positive),
                    "-" => Move::MarkovStabilize(Sign::Negative),
                    _ => return Err(syntax(format!("stab takes + or -, got '{rest}'"))),
                },
                "destab" if rest.is_empty() => Move::MarkovDestabilize,
                _ => return Err(syntax(format!("unknown move '{line}'"))),
            };
            current = mv.strands_after(current);
            if current == 0 {
                return Err(syntax("destabilized below one strand".into()));
            }
            moves.push(mv);
        }

        let start = start.ok_or(ScriptError::Syntax { line: 0, message: "missing start: header".into() })?;
        Ok(MoveScript { start, moves, declared_end })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("strands: {}\n", self.start.strands()));
        out.push_str(&format!("start: {}\n", self.start));
        let profile = self.strand_profile();
        for (m, n) in self.moves.iter().zip(profile) {
            out.push_str(&m.to_line(n));
            out.push('\n');
        }
        if let Some(end) = &self.declared_end {
            out.push_str(&format!("end: {end}\n"));
        }
        out
    }
}

impl fmt::Display for MoveScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl From<BraidError> for ScriptError {
    fn from(source: BraidError) -> Self {
        ScriptError::Braid { line: 0, source }
    }
}
