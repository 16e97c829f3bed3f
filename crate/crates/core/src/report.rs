//! Reproduction reports: each line is a claim checked against a computation.

use serde::Serialize;

use crate::cobordism::{verify_corpus, CorpusOutcome};
use crate::cover::{cy_cover_test, cyclic_cover_books, k3_presentations, unimodular_form};
use crate::error::DbError;
use crate::hat::t2_table;
use crate::knotdb::{KnotDb, KnotRecord};
use crate::search::{search, CurveClass, SearchParams};

pub const REPORTS: [&str; 4] = ["t2-table", "k3-searches", "appendix-scripts", "cover-books"];

/// Hat genus of `T(2,2k+1)` for `k = 1..=11`.
pub const T2_EXPECTED: [i64; 11] = [0, 1, 0, 2, 1, 0, 3, 2, 1, 5, 4];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// A known disagreement in the source data, reported but not fatal.
    Flag,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Flag => "FLAG",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportLine {
    pub status: Status,
    pub item: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub name: String,
    pub lines: Vec<ReportLine>,
}

impl Report {
    pub fn failed(&self) -> bool {
        self.lines.iter().any(|l| l.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.lines.iter().filter(|l| l.status == status).count()
    }

    pub fn to_tsv(&self) -> String {
        self.lines.iter().map(|l| format!("{}\t{}\t{}\n", l.status, l.item, l.detail)).collect()
    }
}

fn line(ok: bool, item: impl Into<String>, detail: impl Into<String>) -> ReportLine {
    ReportLine { status: if ok { Status::Pass } else { Status::Fail }, item: item.into(), detail: detail.into() }
}

pub fn reproduce(name: &str, db: &KnotDb) -> Result<Report, DbError> {
    let lines = match name {
        "t2-table" => t2_lines(),
        "k3-searches" => k3_lines(),
        "appendix-scripts" => script_lines(),
        "cover-books" => cover_lines(db),
        other => return Err(DbError::UnknownReport(other.to_string())),
    };
    Ok(Report { name: name.to_string(), lines })
}

fn t2_lines() -> Vec<ReportLine> {
    t2_table(T2_EXPECTED.len() as i64)
        .into_iter()
        .zip(T2_EXPECTED)
        .map(|(row, expected)| {
            let witness = match (row.witness_genus, row.witness_degree) {
                (Some(g), Some(d)) => format!("genus {g} at degree {d}"),
                _ => "none".to_string(),
            };
            line(
                row.exact() == Some(expected),
                format!("k={} {}", row.k, row.knot),
                format!("lower bound {}, witness {witness}, expected {expected}", row.lower_bound),
            )
        })
        .collect()
}

fn class(a: i64, b: &[i64]) -> CurveClass {
    CurveClass::new(a, b.to_vec())
}

fn k3_lines() -> Vec<ReportLine> {
    let mut out = Vec::new();
    let run = |p, blowups, a_min, a_max, genus| search(SearchParams { p, blowups, a_min, a_max, genus });

    match run(3, 1, 0, 20, 0) {
        Ok(r) => {
            let ok = r.solution_classes() == [class(6, &[4])]
                && r.solutions[0].self_int == 20
                && !r.solutions[0].passes.ohta_ono;
            out.push(line(ok, "K3: p=3 N=1 genus 0 a<=20", format!("solutions {}, self-intersection 20 > 18", fmt(&r.solution_classes()))));
        }
        Err(e) => out.push(line(false, "K3: p=3 N=1 genus 0 a<=20", e.to_string())),
    }
    match run(4, 1, 0, 20, 1) {
        Ok(r) => {
            let ok = r.solution_classes() == [class(10, &[8])] && !r.solutions[0].passes.lines && !r.solutions[0].detail[0].holds;
            out.push(line(ok, "K4: p=4 N=1 genus 1 a<=20", format!("solutions {}, a >= b1 + p fails (10 < 12)", fmt(&r.solution_classes()))));
        }
        Err(e) => out.push(line(false, "K4: p=4 N=1 genus 1 a<=20", e.to_string())),
    }
    match run(6, 4, 0, 9, 0) {
        Ok(r) => {
            let s: Vec<_> = r.surviving().collect();
            let ok = s.len() == 1 && s[0].class() == class(9, &[3, 3, 3, 3]) && s[0].self_int == 45;
            let excluded = s.first().and_then(|s| s.exclusion.as_ref()).is_some();
            out.push(line(
                ok && excluded,
                "K6: p=6 N=4 genus 0 a<=9",
                format!(
                    "{} adjunction solutions, surviving {}, self-intersection 45, excluded by recorded filling argument",
                    r.solutions.len(),
                    fmt(&r.surviving_classes())
                ),
            ));
        }
        Err(e) => out.push(line(false, "K6: p=6 N=4 genus 0 a<=9", e.to_string())),
    }
    match run(6, 4, 10, 24, 0) {
        Ok(r) => {
            let ok = r.solutions.iter().filter(|s| s.passes.conics).all(|s| s.class().chern() >= s.a + 6);
            out.push(line(ok, "K6: p=6 N=4 genus 0 10<=a<=24", "every conic-admissible solution has 3a - sum b >= a + p"));
        }
        Err(e) => out.push(line(false, "K6: p=6 N=4 genus 0 10<=a<=24", e.to_string())),
    }
    match run(7, 5, 9, 16, 0) {
        Ok(r) => out.push(line(
            r.surviving().next().is_none(),
            "K7: p=7 N=5 genus 0 9<=a<=16",
            format!("{} adjunction solutions, none survive the line and conic bounds", r.solutions.len()),
        )),
        Err(e) => out.push(line(false, "K7: p=7 N=5 genus 0 9<=a<=16", e.to_string())),
    }
    out
}

fn fmt(classes: &[CurveClass]) -> String {
    let parts: Vec<_> = classes.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(" "))
}

fn script_lines() -> Vec<ReportLine> {
    verify_corpus()
        .entries
        .into_iter()
        .map(|e| match &e.outcome {
            CorpusOutcome::Verified { end, end_strands, ledger } => line(
                true,
                format!("{} ({})", e.knot, e.id),
                format!(
                    "ends at {end} in B{end_strands}, slk {} -> {}, genus {}",
                    ledger.slk_start,
                    ledger.slk_end,
                    ledger.genus.map_or("-".to_string(), |g| g.to_string())
                ),
            ),
            CorpusOutcome::Failed { error } => line(false, format!("{} ({})", e.knot, e.id), error.clone()),
        })
        .collect()
}

/// What the double-cover books say about fillings of the branched cover.
pub fn filling_description(r: &KnotRecord) -> String {
    let e = &r.entry;
    let b2 = 2 * e.slice_genus;
    match (b2, e.determinant_one, e.signature) {
        (0, true, _) => "integral homology ball".to_string(),
        (0, false, _) => "rational homology ball".to_string(),
        (_, true, Some(s)) => match unimodular_form(b2, s, true) {
            Ok(Some(label)) => label,
            Ok(None) => "undetermined".to_string(),
            Err(err) => err.to_string(),
        },
        _ => format!("b2 = {b2}"),
    }
}

fn cover_lines(db: &KnotDb) -> Vec<ReportLine> {
    let mut out: Vec<ReportLine> = k3_presentations()
        .into_iter()
        .map(|(r, branch)| match cy_cover_test(r, branch) {
            Ok(c) => line(
                c.passes(),
                format!("K3 as {r}-fold cover of {branch}"),
                format!("canonical class trivial: {}, euler {}", c.canonical_trivial, c.euler),
            ),
            Err(e) => line(false, format!("K3 as {r}-fold cover of {branch}"), e.to_string()),
        })
        .collect();

    for rec in db.records.iter().filter(|r| r.entry.filling_claim.is_some()) {
        let claim = rec.entry.filling_claim.as_deref().unwrap_or_default();
        let computed = filling_description(rec);
        let cap = if rec.entry.determinant_one {
            match cyclic_cover_books(2, rec.entry.slice_genus, rec.entry.signature) {
                Ok(b) => format!(", cap b2 {} sigma {}, cap form {}", b.b2_cap, b.sigma_cap.map_or("?".into(), |s| s.to_string()), b.form_label),
                Err(e) => format!(", {e}"),
            }
        } else {
            String::new()
        };
        let detail = format!("g_s {}, filling b2 {}: {computed}{cap}; expected {claim}", rec.entry.slice_genus, 2 * rec.entry.slice_genus);
        let status = match (computed == claim, &rec.entry.flag) {
            (true, _) => Status::Pass,
            (false, Some(_)) => Status::Flag,
            (false, None) => Status::Fail,
        };
        out.push(ReportLine { status, item: rec.entry.name.clone(), detail });
    }
    out
}
