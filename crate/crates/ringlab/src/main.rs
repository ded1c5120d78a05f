//! `ringlab` — compute radicals, decide symmetry properties, and verify the
//! theorem suite over finite rings given as Cayley tables.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use ringlab::error::CliError;
use ringlab::eval::Evaluator;
use ringlab::expr::parse_expression;
use ringlab::{report, ringfile, runner};
use ringlab_core::construct::{ConstructedRing, Coords};
use ringlab_core::harness::{self, RingCorpus};
use ringlab_core::radicals;
use ringlab_core::ring::Subset;
use ringlab_core::{properties, Caps};

#[derive(Parser)]
#[command(
    name = "ringlab",
    version,
    about = "Finite ring laboratory: prime radicals, symmetry classes, and an executable theorem suite"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every property checker on a ring expression
    Props {
        /// Ring expression, e.g. "S4(Z2)" or "file(t2.ring)"
        expr: String,
        /// Emit a JSON array instead of text
        #[arg(long)]
        json: bool,
    },
    /// Compute the radical profile of a ring
    Radical {
        expr: String,
        /// Which prime radical algorithm to run
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Replay the theorem suite over a ring corpus
    Verify {
        /// Corpus file: one expression per line, '#' comments
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Comma-separated check ids to run (default: all)
        #[arg(long)]
        checks: Option<String>,
        #[arg(long)]
        json: bool,
        /// Exit nonzero when any check fails
        #[arg(long)]
        strict: bool,
        /// Worker threads for the check registry
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Write a ring to a .ring file
    Export {
        expr: String,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Fixpoint,
    Rar,
    Primes,
    All,
}

fn caps_from_env() -> Result<Caps, CliError> {
    match std::env::var("RINGLAB_CAP") {
        Ok(value) => {
            let cap: usize = value.trim().parse().map_err(|_| {
                CliError::Format(format!(
                    "RINGLAB_CAP must be a positive integer, got '{value}'"
                ))
            })?;
            Ok(Caps::with_order_cap(cap))
        }
        Err(_) => Ok(Caps::default()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

/// Writes to stdout, exiting quietly when the consumer closed the pipe.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: stdout: {e}");
        std::process::exit(2);
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let caps = caps_from_env()?;
    match cli.command {
        Command::Props { expr, json } => cmd_props(&expr, json, caps),
        Command::Radical { expr, method, json } => cmd_radical(&expr, method, json, caps),
        Command::Verify {
            corpus,
            checks,
            json,
            strict,
            jobs,
        } => cmd_verify(corpus, checks, json, strict, jobs, caps),
        Command::Export { expr, out } => cmd_export(&expr, &out, caps),
    }
}

fn evaluate(expr_text: &str, caps: Caps) -> Result<(String, Arc<ConstructedRing>), CliError> {
    let expr = parse_expression(expr_text)?;
    let mut evaluator = Evaluator::new(caps);
    let built = evaluator.eval(&expr)?;
    Ok((expr.to_string(), built))
}

fn cmd_props(expr_text: &str, json: bool, caps: Caps) -> Result<ExitCode, CliError> {
    let (label, built) = evaluate(expr_text, caps)?;
    let ring = &built.ring;
    let profile = radicals::radical_profile(ring, &caps)?;
    let mut reports = vec![
        properties::is_symmetric(ring),
        properties::is_p_symmetric(ring, &profile.p),
        properties::is_central_symmetric(ring),
        properties::is_generalized_weakly_symmetric(ring),
        properties::is_p_semicommutative(ring, &profile.p),
        properties::is_2_primal(ring, &profile)?,
        properties::is_weakly_reversible(ring),
    ];
    let mut skipped: Vec<&str> = Vec::new();
    {
        let mut capped =
            |result: Result<properties::PropertyReport, ringlab_core::RingError>,
             name: &'static str|
             -> Result<(), CliError> {
                match result {
                    Ok(report) => {
                        reports.push(report);
                        Ok(())
                    }
                    Err(ringlab_core::RingError::CapExceeded { .. }) => {
                        skipped.push(name);
                        Ok(())
                    }
                    Err(other) => Err(other.into()),
                }
            };
        capped(properties::is_left_quasi_duo(ring, &caps), "left_quasi_duo")?;
        capped(properties::all_primes_maximal(ring, &caps), "primes_maximal")?;
        capped(
            properties::is_armendariz_bounded(ring, 1, &caps),
            "armendariz(d=1)",
        )?;
        capped(
            properties::is_p_symmetric_poly_bounded(ring, &profile.p, 1, &caps),
            "p_symmetric_poly(d=1)",
        )?;
    }
    if json {
        let items: Vec<report::PropertyJson> = reports
            .iter()
            .map(|r| report::property_json(&label, &built.coords, r))
            .collect();
        emit(&format!("{}\n", report::to_pretty_json(&items)));
    } else {
        let mut text = format!("ring {} (order {})\n", label, ring.order());
        for r in reports.iter() {
            text.push_str(&report::property_text(&built.coords, r));
            text.push('\n');
        }
        for name in skipped.iter() {
            text.push_str(&format!("{name}: skipped (over budget)\n"));
        }
        emit(&text);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_radical(
    expr_text: &str,
    method: Method,
    json: bool,
    caps: Caps,
) -> Result<ExitCode, CliError> {
    let (label, built) = evaluate(expr_text, caps)?;
    let ring = &built.ring;
    let profile = match method {
        Method::All => radicals::radical_profile(ring, &caps)?,
        single => {
            let (name, subset): (&'static str, Subset) = match single {
                Method::Fixpoint => ("fixpoint", radicals::prime_radical_fixpoint(ring)),
                Method::Rar => ("rar", radicals::prime_radical_ideal_nilpotency(ring)),
                Method::Primes => (
                    "primes",
                    radicals::prime_radical_prime_intersection(ring, &caps)?,
                ),
                Method::All => unreachable!(),
            };
            radicals::RadicalProfile {
                p: subset.clone(),
                n: radicals::nilpotents(ring),
                n2: radicals::square_zero(ring),
                j: radicals::jacobson_radical(ring),
                methods_agreed: true,
                per_method: vec![(name, subset)],
            }
        }
    };
    if json {
        emit(&format!(
            "{}\n",
            report::to_pretty_json(&report::radical_json(&label, ring.order(), &profile))
        ));
    } else {
        emit(&format!(
            "ring {} (order {})\n{}",
            label,
            ring.order(),
            report::radical_text(&profile)
        ));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    corpus_path: Option<PathBuf>,
    checks: Option<String>,
    json: bool,
    strict: bool,
    jobs: Option<usize>,
    caps: Caps,
) -> Result<ExitCode, CliError> {
    let corpus = match corpus_path {
        None => RingCorpus::default_corpus(&caps)?,
        Some(path) => {
            let text = std::fs::read_to_string(&path).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            let lines = ringlab::corpus_lines(&text);
            let mut evaluator = Evaluator::new(caps);
            ringlab::corpus_from_expressions(&mut evaluator, &lines)?
        }
    };
    let selected: Option<Vec<String>> = checks.map(|list| {
        list.split(',')
            .map(|id| id.trim().to_string())
            .filter(|id| !id.is_empty())
            .collect()
    });
    if let Some(ids) = &selected {
        let known: Vec<&'static str> = harness::registry().iter().map(|d| d.id).collect();
        for id in ids {
            if !known.contains(&id.as_str()) {
                return Err(CliError::UnknownCheck(id.clone()));
            }
        }
    }
    let filter: Option<Vec<&str>> = selected
        .as_ref()
        .map(|ids| ids.iter().map(String::as_str).collect());
    let jobs = jobs.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    });
    let suite = runner::run_suite_parallel(&corpus, &caps, filter.as_deref(), jobs);
    if json {
        emit(&format!("{}\n", report::to_pretty_json(&report::suite_json(&suite))));
    } else {
        let decoders: BTreeMap<String, Coords> = corpus
            .entries
            .iter()
            .map(|e| (e.expr.clone(), e.built.coords.clone()))
            .collect();
        emit(&report::suite_text(&suite, &decoders));
    }
    if strict && suite.failures() > 0 {
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_export(expr_text: &str, out: &Path, caps: Caps) -> Result<ExitCode, CliError> {
    let (label, built) = evaluate(expr_text, caps)?;
    ringfile::write_ring(out, &built.ring)?;
    emit(&format!(
        "wrote {} (order {}) to {}\n",
        label,
        built.ring.order(),
        out.display()
    ));
    Ok(ExitCode::SUCCESS)
}
