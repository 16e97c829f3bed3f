//! Combinatorial toolkit for symplectic hats of transverse knots: braid words
//! with a complete equality test, certified move scripts that ledger the
//! cobordisms they encode, adjunction-formula bounds, curve-class searches in
//! blow-ups, and branched-cover bookkeeping.

pub mod braid;
pub mod cobordism;
pub mod cover;
pub mod error;
pub mod hat;
pub mod knotdb;
pub mod report;
pub mod search;

pub use braid::{parse_braid, BraidWord, Generator, NormalForm, Permutation, Sign};
pub use cobordism::{run_script, verify_corpus, CobordismLedger, Move, MoveScript, Replay};
pub use cover::{Branch, CoverBooks, CyCoverCheck};
pub use error::{BoundsError, BraidError, CoverError, DbError, ScriptError, SearchError};
pub use hat::{HatBoundReport, T2Row, TriangularBound, WitnessDb};
pub use knotdb::{load_db, KnotDb, KnotEntry, KnotRecord};
pub use report::{reproduce, Report, ReportLine, Status};
pub use search::{CurveClass, SearchParams, SearchReport, Solution};
