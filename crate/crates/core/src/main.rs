//! Command-line front end: verify the identity catalog, evaluate ad-hoc
//! expressions, and run the randomized property suites.
//!
//! Exit codes: 0 all requested checks pass; 1 any verification or property
//! failure; 2 usage or parse error; 3 evaluation error (degenerate
//! parameters).

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qappell::identity::{catalog, eval, find_record, parse, verify};
use qappell::props::{all_property_names, run_property, PropConfig};
use qappell::report::{ListEntry, ReportEntry};

#[derive(Parser)]
#[command(
    name = "qappell",
    about = "Exact q-series engine: theta functions, Appell-Lerch sums, and \
             mock theta function identities over Q(zeta3)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every catalog identity (gap entries marked).
    List {
        #[arg(long)]
        json: bool,
    },
    /// Verify catalog identities by exact coefficient comparison.
    Verify {
        /// Verify every active catalog entry.
        #[arg(long)]
        all: bool,
        /// Verify specific entries (repeatable).
        #[arg(long = "id")]
        ids: Vec<String>,
        /// Comparison order (all coefficients through q^order).
        #[arg(long, default_value_t = 60)]
        order: i64,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate an expression and print its series.
    Eval {
        expr: String,
        #[arg(long, default_value_t = 60)]
        order: i64,
        #[arg(long)]
        json: bool,
    },
    /// Run the seeded randomized property suites.
    Props {
        /// Cases per property.
        #[arg(long, default_value_t = 50)]
        cases: u32,
        #[arg(long, default_value_t = 60)]
        order: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run only the named properties (repeatable).
        #[arg(long = "name")]
        names: Vec<String>,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::List { json } => cmd_list(json),
        Command::Verify {
            all,
            ids,
            order,
            json,
        } => cmd_verify(all, &ids, order, json),
        Command::Eval { expr, order, json } => cmd_eval(&expr, order, json),
        Command::Props {
            cases,
            order,
            seed,
            names,
            json,
        } => cmd_props(cases, order, seed, &names, json),
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {}", msg);
    ExitCode::from(2)
}

/// Print without panicking when stdout is a closed pipe (`qappell list | head`).
fn emit(line: impl std::fmt::Display) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout(), "{}", line);
}

fn cmd_list(json: bool) -> ExitCode {
    let entries: Vec<ListEntry> = catalog().iter().map(ListEntry::from).collect();
    if json {
        emit(serde_json::to_string_pretty(&entries).unwrap());
    } else {
        for e in &entries {
            emit(e.render_text());
        }
    }
    ExitCode::SUCCESS
}

fn cmd_verify(all: bool, ids: &[String], order: i64, json: bool) -> ExitCode {
    if order < 1 {
        return usage_error("--order must be >= 1");
    }
    if !all && ids.is_empty() {
        return usage_error("verify needs --all or at least one --id");
    }
    let records: Vec<&qappell::identity::IdentityRecord> = if all {
        catalog().iter().collect()
    } else {
        let mut out = Vec::new();
        for id in ids {
            match find_record(id) {
                Some(rec) => out.push(rec),
                None => return usage_error(&format!("unknown catalog id {:?}", id)),
            }
        }
        out
    };
    let entries: Vec<ReportEntry> = records
        .iter()
        .map(|rec| ReportEntry::from(verify(rec, order)))
        .collect();
    if json {
        emit(serde_json::to_string_pretty(&entries).unwrap());
    } else {
        for e in &entries {
            emit(e.render_text());
        }
    }
    if entries.iter().any(|e| e.status == "fail") {
        ExitCode::from(1)
    } else if entries.iter().any(|e| e.status == "error") {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_eval(expr: &str, order: i64, json: bool) -> ExitCode {
    if order < 1 {
        return usage_error("--order must be >= 1");
    }
    let tree = match parse(expr) {
        Ok(t) => t,
        Err(e) => return usage_error(&e.to_string()),
    };
    match eval(&tree, order) {
        Ok(series) => {
            if json {
                #[derive(serde::Serialize)]
                struct Term {
                    exp: i64,
                    coeff: String,
                }
                #[derive(serde::Serialize)]
                struct EvalReport {
                    expr: String,
                    order: i64,
                    terms: Vec<Term>,
                }
                let report = EvalReport {
                    expr: tree.to_string(),
                    order,
                    terms: series
                        .terms()
                        .map(|(e, c)| Term {
                            exp: e,
                            coeff: c.to_string(),
                        })
                        .collect(),
                };
                emit(serde_json::to_string_pretty(&report).unwrap());
            } else {
                emit(&series);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("evaluation error: {}", e);
            ExitCode::from(3)
        }
    }
}

fn cmd_props(cases: u32, order: i64, seed: u64, names: &[String], json: bool) -> ExitCode {
    if order < 1 || cases == 0 {
        return usage_error("--order and --cases must be >= 1");
    }
    let config = PropConfig { cases, order, seed };
    let selected: Vec<&str> = if names.is_empty() {
        all_property_names()
    } else {
        let known = all_property_names();
        let mut out = Vec::new();
        for n in names {
            match known.iter().find(|k| *k == n) {
                Some(k) => out.push(*k),
                None => return usage_error(&format!("unknown property {:?}", n)),
            }
        }
        out
    };
    let entries: Vec<ReportEntry> = selected
        .iter()
        .map(|name| {
            let report = run_property(name, &config).expect("known name");
            ReportEntry::from_prop(&report, order)
        })
        .collect();
    if json {
        emit(serde_json::to_string_pretty(&entries).unwrap());
    } else {
        for e in &entries {
            emit(e.render_text());
        }
    }
    if entries.iter().all(|e| e.status == "pass") {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
