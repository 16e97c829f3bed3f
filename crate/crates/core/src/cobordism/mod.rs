//! Cobordism scripts between braid closures: moves, replay with an Euler
//! characteristic ledger, and generated scripts up to torus knots.

mod corpus;
mod replay;
mod script;
mod torus;

pub use corpus::{corpus_scripts, verify_corpus, CorpusEntry, CorpusOutcome, CorpusReport};
pub use replay::{run_script, CobordismLedger, Replay};
pub use script::{Move, MoveScript};
pub use torus::{to_torus_script, TorusScript};
