use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use weylcert::cochar::{fundamental_group, max_abs_root_pairing, semifree_transversal, Cocharacter};
use weylcert::harness::{parse_claims, render_report, run_verification_suite, Claim, Format, SweepConfig};
use weylcert::parse::{parse_vector, parse_weights};
use weylcert::rational::format as fmt_rat;
use weylcert::reversor::{build_reversor, semifree_rep_analysis, WeightMultiset};
use weylcert::{build_root_system, Error, RatVector, RootSystem, SimpleType};

#[derive(Parser)]
#[command(name = "weylcert", version, about = "Exact checks on root systems, cocharacters and Weyl reversors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the root system as JSON.
    Describe { system: String },
    /// Print the fundamental group of the adjoint group.
    Pi1 {
        system: String,
        /// Include coset representatives and subgroups.
        #[arg(long)]
        reps: bool,
    },
    /// Test whether a cocharacter is semifree.
    Semifree {
        system: String,
        /// Coordinates, or `coset:k` for a transversal representative.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Find a Weyl element sending lambda to -lambda.
    Reversor {
        system: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Reversor or witness for a torus representation given by its weights.
    AnalyzeRep {
        system: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// One weight per line, `mult * coords`.
        #[arg(long)]
        weights: PathBuf,
    },
    /// Run selected claims on one system.
    Verify {
        system: String,
        #[arg(long, default_value = "a,b,c,d")]
        claims: String,
        /// Pairing bound for the claim (c) and reversor sweeps.
        #[arg(long, default_value_t = 8)]
        bound: u64,
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run every claim over many systems.
    Sweep {
        /// The default list of systems (the default when --types is absent).
        #[arg(long, conflicts_with = "types")]
        all: bool,
        /// Comma separated systems, e.g. `A2,D5,E6`.
        #[arg(long, value_delimiter = ',')]
        types: Vec<String>,
        #[arg(long, default_value_t = 8)]
        bound: u64,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Outcome {
    Pass,
    Fail,
}

fn system(s: &str) -> Result<RootSystem, Error> {
    build_root_system(s.parse::<SimpleType>()?)
}

fn lambda(rs: &RootSystem, s: &str) -> Result<RatVector, Error> {
    if let Some(k) = s.trim().strip_prefix("coset:") {
        let k = k
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::Usage(format!("bad coset index {k:?}")))?;
        return Ok(Cocharacter::from_coset(rs, k)?.into_vector());
    }
    let v = parse_vector(rs.model(), s)?;
    Ok(Cocharacter::new(rs, v)?.into_vector())
}

/// Write errors (a closed pipe) are ignored.
fn emit(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn print(v: &Value) {
    emit(&format!("{}\n", serde_json::to_string_pretty(v).expect("serializable")));
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Describe { system: s } => {
            print(&system(&s)?.describe());
            Ok(Outcome::Pass)
        }
        Command::Pi1 { system: s, reps } => {
            let rs = system(&s)?;
            let table = if reps { semifree_transversal(&rs)? } else { fundamental_group(&rs)? };
            print(&table.to_json(reps));
            Ok(Outcome::Pass)
        }
        Command::Semifree { system: s, lambda: l } => {
            let rs = system(&s)?;
            let lam = lambda(&rs, &l)?;
            let (max, root) = max_abs_root_pairing(&rs, &lam);
            print(&json!({
                "lambda": lam,
                "semifree": max <= weylcert::rational::int(1),
                "max_pairing": fmt_rat(&max),
                "maximizing_root": root,
            }));
            Ok(Outcome::Pass)
        }
        Command::Reversor { system: s, lambda: l } => {
            let rs = system(&s)?;
            let lam = lambda(&rs, &l)?;
            match build_reversor(&rs, &lam) {
                Ok(r) => {
                    print(&serde_json::to_value(&r).expect("serializable"));
                    Ok(Outcome::Pass)
                }
                Err(Error::NoReversor { dominant, dominant_negated }) => {
                    print(&json!({
                        "outcome": "no_reversor",
                        "lambda": lam,
                        "dominant": dominant,
                        "dominant_negated": dominant_negated,
                    }));
                    Ok(Outcome::Fail)
                }
                Err(e) => Err(e),
            }
        }
        Command::AnalyzeRep { system: s, lambda: l, weights } => {
            let rs = system(&s)?;
            let lam = lambda(&rs, &l)?;
            let text = fs::read_to_string(&weights)
                .map_err(|e| Error::Usage(format!("{}: {e}", weights.display())))?;
            let wts = WeightMultiset::new(&rs, parse_weights(rs.model(), &text)?)?;
            let a = semifree_rep_analysis(&rs, &lam, &wts)?;
            print(&serde_json::to_value(&a).expect("serializable"));
            Ok(Outcome::Pass)
        }
        Command::Verify { system: s, claims, bound, format, seed } => {
            let format: Format = format.parse()?;
            let cfg = SweepConfig {
                types: vec![s.parse()?],
                claims: parse_claims(&claims)?,
                pairing_bound: bound,
                seed,
                ..SweepConfig::default()
            };
            let report = run_verification_suite(&cfg)?;
            emit(&render_report(&report, format));
            Ok(if report.has_failures() { Outcome::Fail } else { Outcome::Pass })
        }
        Command::Sweep { all: _, types, bound, format, out, seed } => {
            let format: Format = format.parse()?;
            let types = if types.is_empty() {
                SimpleType::default_sweep()
            } else {
                types.iter().map(|t| t.parse()).collect::<Result<_, _>>()?
            };
            let cfg = SweepConfig {
                types,
                claims: Claim::ALL.into_iter().collect(),
                pairing_bound: bound,
                seed,
                ..SweepConfig::default()
            };
            let report = run_verification_suite(&cfg)?;
            let rendered = render_report(&report, format);
            match out {
                Some(path) => {
                    fs::write(&path, &rendered)
                        .map_err(|e| Error::Usage(format!("{}: {e}", path.display())))?;
                    eprintln!("{}", weylcert::harness::summary_line(&report.summary()));
                }
                None => emit(&rendered),
            }
            Ok(if report.has_failures() { Outcome::Fail } else { Outcome::Pass })
        }
    }
}

/// Bad input exits with 2; anything else that goes wrong counts as a failure.
fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_)
            | Error::InvalidVector(_)
            | Error::DimensionMismatch { .. }
            | Error::UnsupportedRank { .. }
            | Error::UnknownType(_)
            | Error::NotACocharacter(_)
            | Error::NotAWeight(_)
            | Error::ZeroCocharacter
            | Error::EmptyRepresentation
            | Error::Usage(_)
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if is_usage(&e) { 2 } else { 1 })
        }
    }
}
