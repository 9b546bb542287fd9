use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use lamnum_core::adequacy::{
    check_predecessor, refute, search_predecessor, RefuteOutcome, SearchOutcome,
};
use lamnum_core::numerals::{builtin, verify_laws};
use lamnum_core::reduction::{
    head_reduce, head_reduce_traced, normalize, normalize_traced, ReductionOutcome, DEFAULT_FUEL,
};
use lamnum_core::syntax::{parse_definitions, parse_with, print, Definitions, PrintMode};
use lamnum_core::term::Term;

mod selftest;

/// Fuel (β-contraction budget) resolution order: flag, then the
/// LAMNUM_FUEL environment variable, then the built-in default.
fn resolve_fuel(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("LAMNUM_FUEL")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(DEFAULT_FUEL)
}

#[derive(Parser)]
#[command(name = "lamnum", version, about = "Workbench for λ-calculus numeral systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TermInput {
    /// Inline term text
    term: Option<String>,
    /// Read the term from a file instead
    #[arg(long, conflicts_with = "term")]
    file: Option<PathBuf>,
    /// Definitions file (`name = term` per line) usable in the term
    #[arg(long)]
    defs: Option<PathBuf>,
}

#[derive(Args)]
struct CandidateInput {
    /// Candidate predecessor: a file path, or inline term text if no
    /// such file exists
    #[arg(long)]
    candidate: String,
    /// Definitions file usable inside the candidate
    #[arg(long)]
    defs: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a term and echo its canonical form
    Parse(TermInput),
    /// Head-reduce a term to head normal form
    Reduce {
        #[command(flatten)]
        input: TermInput,
        #[arg(long)]
        fuel: Option<u64>,
        /// Record and print every intermediate term
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Normalize a term (leftmost-outermost) to β-normal form
    Normalize {
        #[command(flatten)]
        input: TermInput,
        #[arg(long)]
        fuel: Option<u64>,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Verify the numeral-system laws up to a bound
    NumeralsVerify {
        #[arg(long)]
        system: String,
        #[arg(long, default_value_t = 50)]
        bound: u64,
        #[arg(long)]
        fuel: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Check the predecessor law for a candidate term
    PredCheck {
        #[arg(long)]
        system: String,
        #[command(flatten)]
        candidate: CandidateInput,
        #[arg(long, default_value_t = 50)]
        bound: u64,
        #[arg(long)]
        fuel: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Produce a refutation certificate for a candidate predecessor
    Refute {
        #[arg(long, default_value = "nour")]
        system: String,
        #[command(flatten)]
        candidate: CandidateInput,
        #[arg(long)]
        fuel: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Brute-force sweep over all closed terms up to a size bound
    Search {
        #[arg(long, default_value = "nour")]
        system: String,
        #[arg(long)]
        max_size: usize,
        #[arg(long, default_value_t = 3)]
        bound: u64,
        #[arg(long)]
        fuel: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Run the invariant suite at reduced bounds
    Selftest {
        #[arg(long)]
        json: bool,
    },
}

fn load_defs(path: &Option<PathBuf>) -> Result<Definitions, String> {
    match path {
        None => Ok(Definitions::new()),
        Some(p) => {
            let src = fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            parse_definitions(&src, &p.display().to_string()).map_err(|e| e.to_string())
        }
    }
}

impl TermInput {
    fn term(&self) -> Result<Term, String> {
        let defs = load_defs(&self.defs)?;
        match (&self.term, &self.file) {
            (Some(text), None) => {
                parse_with(text, "<arg>", &defs).map_err(|e| e.to_string())
            }
            (None, Some(path)) => {
                let src =
                    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
                parse_with(&src, &path.display().to_string(), &defs).map_err(|e| e.to_string())
            }
            (None, None) => Err("expected a term (inline or via --file)".to_string()),
            (Some(_), Some(_)) => unreachable!("clap conflict"),
        }
    }
}

impl CandidateInput {
    fn term(&self) -> Result<Term, String> {
        let defs = load_defs(&self.defs)?;
        let path = PathBuf::from(&self.candidate);
        if path.is_file() {
            let src = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
            parse_with(&src, &self.candidate, &defs).map_err(|e| e.to_string())
        } else {
            parse_with(&self.candidate, "<arg>", &defs).map_err(|e| e.to_string())
        }
    }
}

fn print_reduction(out: &ReductionOutcome, trace: bool, json: bool) {
    if json {
        println!("{}", out.to_json());
        return;
    }
    if trace {
        if let Some(steps) = &out.trace {
            for (i, t) in steps.iter().enumerate() {
                println!("{i}\t{}", print(t, PrintMode::Canonical));
            }
        }
    }
    println!("status: {}", out.status.label());
    println!("steps: {}", out.steps);
    println!("result: {}", print(&out.result, PrintMode::Canonical));
}

fn run() -> Result<u8, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Parse(input) => {
            let t = input.term()?;
            println!("{}", print(&t, PrintMode::Canonical));
            Ok(0)
        }
        Command::Reduce {
            input,
            fuel,
            trace,
            json,
        } => {
            let t = input.term()?;
            let fuel = resolve_fuel(fuel);
            let out = if trace {
                head_reduce_traced(&t, fuel)
            } else {
                head_reduce(&t, fuel)
            };
            print_reduction(&out, trace, json);
            Ok(0)
        }
        Command::Normalize {
            input,
            fuel,
            trace,
            json,
        } => {
            let t = input.term()?;
            let fuel = resolve_fuel(fuel);
            let out = if trace {
                normalize_traced(&t, fuel)
            } else {
                normalize(&t, fuel)
            };
            print_reduction(&out, trace, json);
            Ok(0)
        }
        Command::NumeralsVerify {
            system,
            bound,
            fuel,
            json,
        } => {
            let sys = builtin(&system).map_err(|e| e.to_string())?;
            let report = verify_laws(&sys, bound, resolve_fuel(fuel));
            if json {
                println!("{}", report.to_json());
            } else {
                println!("{report}");
            }
            Ok(if report.all_pass() { 0 } else { 1 })
        }
        Command::PredCheck {
            system,
            candidate,
            bound,
            fuel,
            json,
        } => {
            let sys = builtin(&system).map_err(|e| e.to_string())?;
            let cand = candidate.term()?;
            let report = check_predecessor(&sys, &cand, bound, resolve_fuel(fuel))
                .map_err(|e| e.to_string())?;
            if json {
                println!("{}", report.to_json());
            } else {
                println!("{report}");
            }
            Ok(if report.all_pass() { 0 } else { 1 })
        }
        Command::Refute {
            system,
            candidate,
            fuel,
            json,
        } => {
            let sys = builtin(&system).map_err(|e| e.to_string())?;
            let cand = candidate.term()?;
            match refute(&sys, &cand, resolve_fuel(fuel)).map_err(|e| e.to_string())? {
                RefuteOutcome::Certificate(cert) => {
                    if json {
                        println!("{}", cert.to_json());
                    } else {
                        println!("{cert}");
                    }
                    Ok(0)
                }
                RefuteOutcome::CandidateSurvives => {
                    if json {
                        println!("{}", json!({"verdict": "CandidateSurvives"}));
                    } else {
                        println!("verdict: CandidateSurvives");
                    }
                    Ok(1)
                }
            }
        }
        Command::Search {
            system,
            max_size,
            bound,
            fuel,
            json,
        } => {
            let sys = builtin(&system).map_err(|e| e.to_string())?;
            match search_predecessor(&sys, max_size, bound, resolve_fuel(fuel)) {
                SearchOutcome::NoneFound(stats) => {
                    if json {
                        println!(
                            "{}",
                            json!({"outcome": "NoneFound", "stats": stats.to_json()})
                        );
                    } else {
                        println!(
                            "no predecessor among {} closed terms of size <= {max_size}",
                            stats.candidates
                        );
                        println!(
                            "rejected at n=0: {}, at n>=1: {}, fuel-exhausted: {}",
                            stats.rejected_at_zero, stats.rejected_later, stats.fuel_exhausted
                        );
                    }
                    Ok(0)
                }
                SearchOutcome::Found(t) => {
                    if json {
                        println!(
                            "{}",
                            json!({"outcome": "Found", "term": print(&t, PrintMode::Canonical)})
                        );
                    } else {
                        println!("survivor: {}", print(&t, PrintMode::Canonical));
                    }
                    Ok(1)
                }
            }
        }
        Command::Selftest { json } => selftest::run(json),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
