//! The built-in knot table. Names are opaque labels and may differ from other
//! tables by a mirror; the braid word is what every computation uses.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::{parse_braid, BraidWord};
use crate::cobordism::{corpus_scripts, run_script, MoveScript};
use crate::error::DbError;
use crate::hat::hat_genus_at_degree;

pub const DB_ENV: &str = "HATLAB_DB";

const EMBEDDED: &str = include_str!("../data/knots.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Target {
    pub label: String,
    pub degree: i64,
}

/// One knot as stored on disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotEntry {
    pub name: String,
    pub aliases: Vec<String>,
    pub strands: usize,
    pub braid: String,
    pub quasipositive: bool,
    pub slice_genus: i64,
    pub determinant_one: bool,
    pub signature: Option<i64>,
    pub script_ref: Option<String>,
    pub target: Option<Target>,
    pub filling_claim: Option<String>,
    pub flag: Option<String>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct DbFile {
    knots: Vec<KnotEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotRecord {
    pub entry: KnotEntry,
    pub braid: BraidWord,
}

impl KnotRecord {
    pub fn name(&self) -> &str {
        &self.entry.name
    }

    pub fn self_linking(&self) -> i64 {
        self.braid.link_self_linking()
    }

    pub fn matches(&self, key: &str) -> bool {
        self.entry.name == key
            || self.entry.aliases.iter().any(|a| a == key)
            || self.entry.script_ref.as_deref() == Some(key)
    }

    fn script(&self) -> Result<Option<MoveScript>, DbError> {
        let Some(id) = &self.entry.script_ref else { return Ok(None) };
        let text = corpus_scripts()
            .iter()
            .find(|s| s.id == id)
            .ok_or_else(|| DbError::UnknownScript(id.clone()))?
            .text;
        MoveScript::parse(text).map(Some).map_err(|e| self.err(e.to_string()))
    }

    fn err(&self, reason: impl Into<String>) -> DbError {
        DbError::Record { name: self.entry.name.clone(), reason: reason.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotDb {
    pub records: Vec<KnotRecord>,
    /// `"embedded"` or the path the table was read from.
    pub origin: String,
}

impl KnotDb {
    pub fn embedded() -> Result<KnotDb, DbError> {
        Self::from_json(EMBEDDED, "embedded")
    }

    /// Parses and checks every record; the first bad record aborts the load.
    pub fn from_json(text: &str, origin: &str) -> Result<KnotDb, DbError> {
        let file: DbFile = serde_json::from_str(text)?;
        let records = file.knots.into_iter().map(check_entry).collect::<Result<Vec<_>, _>>()?;
        Ok(KnotDb { records, origin: origin.to_string() })
    }

    pub fn to_json(&self) -> String {
        let file = DbFile { knots: self.records.iter().map(|r| r.entry.clone()).collect() };
        serde_json::to_string_pretty(&file).expect("knot entries serialize")
    }

    pub fn get(&self, key: &str) -> Result<&KnotRecord, DbError> {
        self.records.iter().find(|r| r.matches(key)).ok_or_else(|| DbError::UnknownKnot(key.to_string()))
    }

    /// Replays every referenced script and checks that it starts at the
    /// record's braid.
    pub fn check_scripts(&self) -> Result<(), DbError> {
        self.records.par_iter().try_for_each(|r| {
            let Some(script) = r.script()? else { return Ok(()) };
            let same_start = script.start.strands() == r.braid.strands()
                && script.start.equal(&r.braid).map_err(|e| r.err(e.to_string()))?;
            if !same_start {
                return Err(r.err(format!("script starts at {}, not at the record braid", script.start)));
            }
            run_script(&script).map(|_| ()).map_err(|e| r.err(format!("script does not replay: {e}")))
        })
    }
}

fn check_entry(entry: KnotEntry) -> Result<KnotRecord, DbError> {
    let fail = |reason: String| DbError::Record { name: entry.name.clone(), reason };
    let braid = parse_braid(&entry.braid, entry.strands).map_err(|e| fail(e.to_string()))?;
    if !braid.is_knot() {
        return Err(fail(format!("closure has {} components", braid.closure_components())));
    }
    let slk = braid.link_self_linking();
    if entry.quasipositive && slk != 2 * entry.slice_genus - 1 {
        return Err(fail(format!("self-linking {slk} does not match slice genus {}", entry.slice_genus)));
    }
    if let Some(t) = &entry.target {
        hat_genus_at_degree(slk, t.degree).map_err(|e| fail(e.to_string()))?;
    }
    if let Some(id) = &entry.script_ref {
        if !corpus_scripts().iter().any(|s| s.id == id) {
            return Err(DbError::UnknownScript(id.clone()));
        }
    }
    Ok(KnotRecord { entry, braid })
}

/// The table named by `HATLAB_DB`, or the embedded one.
pub fn load_db() -> Result<KnotDb, DbError> {
    match std::env::var_os(DB_ENV) {
        Some(path) => {
            let path = path.to_string_lossy().into_owned();
            let text = std::fs::read_to_string(&path).map_err(|source| DbError::Io { path: path.clone(), source })?;
            KnotDb::from_json(&text, &path)
        }
        None => KnotDb::embedded(),
    }
}
