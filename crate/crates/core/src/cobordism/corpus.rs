use rayon::prelude::*;
use serde::Serialize;

use super::replay::{run_script, CobordismLedger};
use super::script::MoveScript;

/// A built-in script: id, knot name and script text.
#[derive(Debug, Clone, Copy)]
pub struct CorpusScript {
    pub id: &'static str,
    pub knot: &'static str,
    pub text: &'static str,
}

macro_rules! corpus {
    ($(($id:literal, $knot:literal)),* $(,)?) => {
        &[$(CorpusScript {
            id: $id,
            knot: $knot,
            text: include_str!(concat!("../../data/scripts/", $id, ".hat")),
        }),*]
    };
}

static CORPUS: &[CorpusScript] = corpus![
    ("p237", "P(-2,3,7)"),
    ("m8_20", "m(8_20)"),
    ("m9_46", "m(9_46)"),
    ("10_140", "10_140"),
    ("m12n318", "m(12n_318)"),
    ("m10_155", "m(10_155)"),
    ("m11n50", "m(11n_50)"),
    ("m11n132", "m(11n_132)"),
    ("11n139", "11n_139"),
    ("m11n172", "m(11n_172)"),
    ("m12n121", "m(12n_121)"),
    ("m12n145", "m(12n_145)"),
    ("12n292", "12n_292"),
    ("m12n393", "m(12n_393)"),
    ("12n473", "12n_473"),
    ("12n582", "12n_582"),
    ("12n708", "12n_708"),
    ("m12n721", "m(12n_721)"),
    ("m12n768", "m(12n_768)"),
    ("12n838", "12n_838"),
    ("8_21", "8_21"),
];

pub fn corpus_scripts() -> &'static [CorpusScript] {
    CORPUS
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum CorpusOutcome {
    /// `end` is the declared end word, certified equal to the final word.
    Verified { end: String, end_strands: usize, ledger: CobordismLedger },
    Failed { error: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusEntry {
    pub id: String,
    pub knot: String,
    pub outcome: CorpusOutcome,
}

impl CorpusEntry {
    pub fn passed(&self) -> bool {
        matches!(self.outcome, CorpusOutcome::Verified { .. })
    }

    pub fn ledger(&self) -> Option<&CobordismLedger> {
        match &self.outcome {
            CorpusOutcome::Verified { ledger, .. } => Some(ledger),
            CorpusOutcome::Failed { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub entries: Vec<CorpusEntry>,
}

impl CorpusReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(CorpusEntry::passed)
    }

    pub fn passed_count(&self) -> usize {
        self.entries.iter().filter(|e| e.passed()).count()
    }

    pub fn entry(&self, id: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

fn verify_one(s: &CorpusScript) -> CorpusEntry {
    let replayed = MoveScript::parse(s.text).and_then(|script| {
        let replay = run_script(&script)?;
        Ok((script.declared_end.unwrap_or_else(|| replay.end.clone()), replay))
    });
    let outcome = match replayed {
        Ok((end, replay)) => CorpusOutcome::Verified {
            end: end.to_string(),
            end_strands: end.strands(),
            ledger: replay.ledger,
        },
        Err(e) => CorpusOutcome::Failed { error: e.to_string() },
    };
    CorpusEntry { id: s.id.to_string(), knot: s.knot.to_string(), outcome }
}

/// Replays every built-in script in parallel. Entries keep corpus order.
pub fn verify_corpus() -> CorpusReport {
    CorpusReport { entries: CORPUS.par_iter().map(verify_one).collect() }
}
