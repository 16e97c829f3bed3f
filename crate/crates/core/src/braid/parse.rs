//! Text form of braid words.
//!
//! Grammar: `word := term*`, `term := atom ('^' int)?`,
//! `atom := letter | '(' word ')'`, whitespace ignored. Letters are `x y z w`
//! for `σ_1..σ_4` (capitals for inverses) or the numeric form `s<i>` / `S<i>`.
//! A negative power inverts the atom.

use super::BraidWord;
use crate::error::BraidError;

const LETTERS: [char; 4] = ['x', 'y', 'z', 'w'];

/// Largest strand count printed in letter form.
const LETTER_FORM_MAX_STRANDS: usize = 5;

pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord, BraidError> {
    let mut parser = Parser { chars: text.chars().collect(), i: 0, strands };
    let letters = parser.word()?;
    if parser.i < parser.chars.len() {
        return Err(BraidError::UnbalancedParenthesis { position: parser.i });
    }
    BraidWord::from_letters(strands, letters)
}

struct Parser {
    chars: Vec<char>,
    i: usize,
    strands: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.i < self.chars.len() && self.chars[self.i].is_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).copied()
    }

    fn digits(&mut self) -> Option<String> {
        let from = self.i;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        (from < self.i).then(|| self.chars[from..self.i].iter().collect())
    }

    /// Parses terms until end of input or a closing parenthesis.
    fn word(&mut self) -> Result<Vec<i32>, BraidError> {
        let mut letters = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(')') => return Ok(letters),
                Some(_) => letters.extend(self.term()?),
            }
        }
    }

    fn term(&mut self) -> Result<Vec<i32>, BraidError> {
        let atom = self.atom()?;
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(atom);
        }
        let caret = self.i;
        self.i += 1;
        self.skip_ws();
        let negative = match self.peek() {
            Some('-') => {
                self.i += 1;
                true
            }
            Some('+') => {
                self.i += 1;
                false
            }
            _ => false,
        };
        let magnitude: usize = self
            .digits()
            .and_then(|d| d.parse().ok())
            .ok_or(BraidError::MalformedPower { position: caret })?;
        let base: Vec<i32> = if negative { atom.iter().rev().map(|l| -l).collect() } else { atom };
        Ok(base.repeat(magnitude))
    }

    fn atom(&mut self) -> Result<Vec<i32>, BraidError> {
        let start = self.i;
        let c = self.chars[start];
        if c == '(' {
            self.i += 1;
            let inner = self.word()?;
            if self.peek() != Some(')') {
                return Err(BraidError::UnbalancedParenthesis { position: start });
            }
            self.i += 1;
            return Ok(inner);
        }
        let (index, positive) = if let Some(k) = LETTERS.iter().position(|&l| l == c.to_ascii_lowercase()) {
            self.i += 1;
            (k + 1, c.is_ascii_lowercase())
        } else if c == 's' || c == 'S' {
            self.i += 1;
            let index: usize = self
                .digits()
                .and_then(|d| d.parse().ok())
                .ok_or(BraidError::UnknownLetter { letter: c, position: start })?;
            if index == 0 {
                return Err(BraidError::IndexOutOfRange { index, strands: self.strands });
            }
            (index, c == 's')
        } else {
            return Err(BraidError::UnknownLetter { letter: c, position: start });
        };
        if index >= self.strands {
            return Err(BraidError::IndexOutOfRange { index, strands: self.strands });
        }
        Ok(vec![index as i32 * if positive { 1 } else { -1 }])
    }
}

/// Letter form with runs folded into positive powers (`x^3Y^2`) for up to five
/// strands, numeric form (`s1^3 S2^2`) beyond that. The empty word prints as "".
pub(crate) fn print_braid(word: &BraidWord) -> String {
    let letter_form = word.strands() <= LETTER_FORM_MAX_STRANDS;
    let mut terms: Vec<String> = Vec::new();
    let letters = word.letters();
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let mut run = 1;
        while i + run < letters.len() && letters[i + run] == l {
            run += 1;
        }
        let index = l.unsigned_abs() as usize;
        let mut term = if letter_form {
            let c = LETTERS[index - 1];
            if l > 0 { c.to_string() } else { c.to_ascii_uppercase().to_string() }
        } else {
            format!("{}{}", if l > 0 { 's' } else { 'S' }, index)
        };
        if run > 1 {
            term.push_str(&format!("^{run}"));
        }
        terms.push(term);
        i += run;
    }
    terms.join(if letter_form { "" } else { " " })
}
