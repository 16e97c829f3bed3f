use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use hatlab_core::cobordism::{run_script, verify_corpus, CorpusOutcome, MoveScript};
use hatlab_core::cover::cyclic_cover_books;
use hatlab_core::hat::{hat_bounds, t2_table};
use hatlab_core::knotdb::load_db;
use hatlab_core::report::{reproduce, REPORTS};
use hatlab_core::search::{search_with_cap, SearchParams, DEFAULT_CAP};
use hatlab_core::{parse_braid, BraidWord};

#[derive(Parser)]
#[command(name = "hatlab", version, about = "Braid scripts, hat bounds and curve searches for transverse knots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Self-linking number of a braid closure.
    Slk {
        braid: String,
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Decide whether two braid words are equal in the braid group.
    Eq {
        left: String,
        right: String,
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Replay a move script and print its ledger.
    RunScript {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Replay every built-in script.
    VerifyCorpus {
        #[arg(long)]
        json: bool,
    },
    /// Hat genus and degree bounds from the self-linking number.
    Bounds {
        #[arg(long, allow_hyphen_values = true)]
        slk: i64,
        #[arg(long)]
        slice_genus: Option<i64>,
        /// Knot label for witness lookup, e.g. "T(2,21)".
        #[arg(long)]
        knot: Option<String>,
        #[arg(long, default_value_t = 4)]
        span: i64,
        #[arg(long)]
        json: bool,
    },
    /// Hat genus table for T(2,2k+1).
    T2Table {
        #[arg(long, default_value_t = 11)]
        kmax: i64,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate curve classes solving adjunction in a blow-up.
    Search {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        blowups: usize,
        #[arg(long, default_value_t = 0)]
        genus: i64,
        #[arg(long, default_value_t = 0)]
        amin: i64,
        #[arg(long)]
        amax: i64,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u128,
        #[arg(long)]
        json: bool,
    },
    /// Betti and signature books for the cyclic cover of a database knot.
    Covers {
        #[arg(long)]
        knot: String,
        #[arg(long, default_value_t = 2)]
        r: i64,
        #[arg(long)]
        json: bool,
    },
    /// Re-run a stored claim set; `all` runs every report.
    Reproduce {
        report: String,
        #[arg(long)]
        json: bool,
    },
}

fn braid_arg(text: &str, strands: Option<usize>) -> Result<BraidWord> {
    if let Some(n) = strands {
        return parse_braid(text, n).with_context(|| format!("cannot parse {text:?}"));
    }
    (1..=32)
        .find_map(|n| parse_braid(text, n).ok())
        .with_context(|| format!("cannot parse {text:?} on up to 32 strands"))
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Slk { braid, strands } => {
            let w = braid_arg(&braid, strands)?;
            println!("{}", w.self_linking()?);
        }
        Command::Eq { left, right, strands } => {
            let a = braid_arg(&left, strands)?;
            let n = strands.unwrap_or(a.strands());
            let b = braid_arg(&right, Some(n)).or_else(|_| braid_arg(&right, None))?;
            let n = a.strands().max(b.strands());
            let same = a.widen(n)?.equal(&b.widen(n)?)?;
            println!("{same}");
            return Ok(same);
        }
        Command::RunScript { file, json } => {
            let text = std::fs::read_to_string(&file).with_context(|| format!("cannot read {}", file.display()))?;
            let script = MoveScript::parse(&text)?;
            let replay = run_script(&script)?;
            if json {
                print_json(&serde_json::json!({ "end": replay.end.to_string(), "ledger": replay.ledger }))?;
            } else {
                let l = &replay.ledger;
                println!("end\t{}", replay.end);
                println!("strands\t{}", replay.end.strands());
                println!("bands\t{}", l.bands);
                println!("euler\t{}", l.euler);
                println!("genus\t{}", l.genus.map_or("-".to_string(), |g| g.to_string()));
                println!("slk\t{} -> {}", l.slk_start, l.slk_end);
                println!("stabilized\t{}", l.stabilized);
            }
        }
        Command::VerifyCorpus { json } => {
            let report = verify_corpus();
            if json {
                print_json(&report)?;
            } else {
                for e in &report.entries {
                    match &e.outcome {
                        CorpusOutcome::Verified { end, ledger, .. } => println!(
                            "PASS\t{}\t{}\t{}\tgenus {}",
                            e.id,
                            e.knot,
                            end,
                            ledger.genus.map_or("-".to_string(), |g| g.to_string())
                        ),
                        CorpusOutcome::Failed { error } => println!("FAIL\t{}\t{}\t{error}", e.id, e.knot),
                    }
                }
                println!("{}/{} scripts verified", report.passed_count(), report.entries.len());
            }
            return Ok(report.all_passed());
        }
        Command::Bounds { slk, slice_genus, knot, span, json } => {
            let r = hat_bounds(slk, slice_genus, knot.as_deref(), span)?;
            if json {
                print_json(&r)?;
            } else {
                println!("slk\t{}", r.slk);
                println!("slice_genus\t{}", r.slice_genus);
                println!("degree_lb\t{}", r.degree_lb);
                println!("genus_lb\t{}", r.genus_lb);
                for (d, g) in &r.genus_by_degree {
                    println!("degree {d}\tgenus {g}");
                }
                for (d, g, source) in &r.witnesses {
                    println!("witness\tdegree {d}\tgenus {g}\t{source}");
                }
            }
        }
        Command::T2Table { kmax, json } => {
            if kmax < 1 {
                bail!("--kmax must be at least 1");
            }
            let rows = t2_table(kmax);
            if json {
                print_json(&rows)?;
            } else {
                let ks: Vec<_> = rows.iter().map(|r| r.k.to_string()).collect();
                let gs: Vec<_> = rows
                    .iter()
                    .map(|r| match (r.exact(), r.witness_genus) {
                        (Some(g), _) => g.to_string(),
                        (None, Some(w)) => format!("{}..{w}", r.lower_bound),
                        (None, None) => format!(">={}", r.lower_bound),
                    })
                    .collect();
                println!("k\t{}", ks.join("\t"));
                println!("hat_genus(T(2,2k+1))\t{}", gs.join("\t"));
            }
        }
        Command::Search { p, blowups, genus, amin, amax, cap, json } => {
            let params = SearchParams { p, blowups, a_min: amin, a_max: amax, genus };
            let r = search_with_cap(params, cap)?;
            if json {
                print_json(&r)?;
            } else {
                println!("a\tb\tself_int\tlines\tconics\tohta_ono\tsurvives");
                for s in &r.solutions {
                    let b: Vec<_> = s.b.iter().map(ToString::to_string).collect();
                    println!(
                        "{}\t{}\t{}\t{}\t{}\t{}\t{}{}",
                        s.a,
                        b.join(","),
                        s.self_int,
                        s.passes.lines,
                        s.passes.conics,
                        s.passes.ohta_ono,
                        s.passes.all(),
                        s.exclusion.as_ref().map_or(String::new(), |e| format!("\texcluded: {e}"))
                    );
                }
                println!("{} solutions, {} surviving", r.solutions.len(), r.surviving().count());
            }
        }
        Command::Covers { knot, r, json } => {
            let db = load_db()?;
            let rec = db.get(&knot)?;
            let sigma = if r == 2 { rec.entry.signature } else { None };
            let books = cyclic_cover_books(r, rec.entry.slice_genus, sigma)?;
            if json {
                print_json(&books)?;
            } else {
                let show = |v: Option<i64>| v.map_or("?".to_string(), |v| v.to_string());
                println!(
                    "{}\tr={}\tb2_filling={}\tb2_cap={}\tsigma_filling={}\tsigma_cap={}\tcap_form={}",
                    rec.name(),
                    books.r,
                    books.b2_filling,
                    books.b2_cap,
                    show(books.sigma_filling),
                    show(books.sigma_cap),
                    books.form_label
                );
            }
        }
        Command::Reproduce { report, json } => {
            let db = load_db()?;
            let names: Vec<&str> = if report == "all" { REPORTS.to_vec() } else { vec![report.as_str()] };
            let reports = names.iter().map(|n| reproduce(n, &db)).collect::<Result<Vec<_>, _>>()?;
            if json {
                print_json(&reports)?;
            } else {
                for r in &reports {
                    if reports.len() > 1 {
                        println!("# {}", r.name);
                    }
                    print!("{}", r.to_tsv());
                }
            }
            return Ok(!reports.iter().any(|r| r.failed()));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
