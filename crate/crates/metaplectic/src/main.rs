//! Thin command-line front end: run named verification suites and emit
//! datasets.  Exit code 0 iff every check passed; 2 on usage errors.

use std::path::PathBuf;
use std::process::ExitCode;
use std::thread;

use clap::Parser;
use serde::{Deserialize, Serialize};

use metaplectic::emit::{emit, EmitFormat, EmitOptions};
use metaplectic::suites::{run_suite, SuiteOptions, SuiteReport, SUITE_NAMES};
use metaplectic::{Error, Result};

#[derive(Parser, Debug)]
#[command(
    name = "metaplectic",
    version,
    about = "Exact and numerical verification of the Fock-space branching under a principal SL(2,R)"
)]
struct Cli {
    /// Verification suite to run (repeatable); `all` expands to every suite
    #[arg(long = "suite", value_name = "NAME", conflicts_with = "emit")]
    suites: Vec<String>,

    /// Print reports as a versioned JSON document instead of human text
    #[arg(long)]
    json: bool,

    /// Largest matrix rank n for the sl(2) suites
    #[arg(long)]
    n: Option<u32>,

    /// H-weight selecting a ladder (e.g. -1 or 0)
    #[arg(long, allow_negative_numbers = true)]
    weight: Option<i64>,

    /// Ladder depth / degree bound m_max
    #[arg(long)]
    mmax: Option<u32>,

    /// Spectral truncation size N
    #[arg(long)]
    size: Option<usize>,

    /// Highest-weight ladder parameter k
    #[arg(long)]
    k: Option<u32>,

    /// Series depth L
    #[arg(long)]
    terms: Option<u32>,

    /// Tolerance override for the numerical checks
    #[arg(long)]
    tol: Option<f64>,

    /// Write output to this file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,

    /// JSON file with a suite batch; explicit flags override its values
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Dataset to emit instead of running suites
    #[arg(long, value_name = "DATASET")]
    emit: Option<String>,

    /// Dataset format
    #[arg(long, default_value = "json", value_name = "json|csv")]
    format: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    #[serde(default)]
    suites: Vec<ConfigEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigEntry {
    suite: String,
    n: Option<u32>,
    weight: Option<i64>,
    mmax: Option<u32>,
    size: Option<usize>,
    k: Option<u32>,
    terms: Option<u32>,
    tol: Option<f64>,
}

#[derive(Serialize)]
struct BatchReport<'a> {
    schema: &'static str,
    suites: &'a [SuiteReport],
}

fn cli_options(cli: &Cli) -> SuiteOptions {
    SuiteOptions {
        n: cli.n,
        weight: cli.weight,
        m_max: cli.mmax,
        size: cli.size,
        k: cli.k,
        terms: cli.terms,
        tol: cli.tol,
    }
}

/// Config values filled in only where the command line left a knob unset.
fn merged_options(cli: &Cli, entry: &ConfigEntry) -> SuiteOptions {
    SuiteOptions {
        n: cli.n.or(entry.n),
        weight: cli.weight.or(entry.weight),
        m_max: cli.mmax.or(entry.mmax),
        size: cli.size.or(entry.size),
        k: cli.k.or(entry.k),
        terms: cli.terms.or(entry.terms),
        tol: cli.tol.or(entry.tol),
    }
}

fn write_out(cli: &Cli, payload: &str) -> Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, payload).map_err(Error::from),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<bool> {
    if let Some(dataset) = &cli.emit {
        let format: EmitFormat = cli.format.parse()?;
        let opts = EmitOptions {
            weight: cli.weight,
            m_max: cli.mmax,
            size: cli.size,
            k: cli.k,
            terms: cli.terms,
        };
        let payload = emit(dataset, format, &opts)?;
        write_out(cli, &payload)?;
        return Ok(true);
    }

    let mut jobs: Vec<(String, SuiteOptions)> = Vec::new();
    if let Some(path) = &cli.config {
        let text = std::fs::read_to_string(path)?;
        let config: ConfigFile =
            serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{path:?}: {e}")))?;
        for entry in &config.suites {
            jobs.push((entry.suite.clone(), merged_options(cli, entry)));
        }
    }
    for name in &cli.suites {
        if name == "all" {
            for s in SUITE_NAMES {
                jobs.push((s.to_string(), cli_options(cli)));
            }
        } else {
            jobs.push((name.clone(), cli_options(cli)));
        }
    }
    if jobs.is_empty() {
        return Err(Error::InvalidOption(
            "nothing to do: pass --suite, --config, or --emit".into(),
        ));
    }

    // Suites run concurrently; reports are assembled in declaration order.
    let reports: Vec<Result<SuiteReport>> = thread::scope(|scope| {
        let handles: Vec<_> = jobs
            .iter()
            .map(|(name, opts)| scope.spawn(move || run_suite(name, opts)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    });
    let reports: Vec<SuiteReport> = reports.into_iter().collect::<Result<_>>()?;

    let all_passed = reports.iter().all(SuiteReport::passed);
    let payload = if cli.json {
        let mut s = if reports.len() == 1 {
            serde_json::to_string_pretty(&reports[0])?
        } else {
            serde_json::to_string_pretty(&BatchReport {
                schema: "1",
                suites: &reports,
            })?
        };
        s.push('\n');
        s
    } else {
        let mut s = String::new();
        for r in &reports {
            s.push_str(&r.render_text());
        }
        let total: usize = reports.iter().map(|r| r.checks.len()).sum();
        let passed: usize = reports
            .iter()
            .map(|r| r.checks.iter().filter(|c| c.passed()).count())
            .sum();
        s.push_str(&format!("total: {passed}/{total} checks passed\n"));
        s
    };
    write_out(cli, &payload)?;
    Ok(all_passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::UnknownSuite(_)
                | Error::UnknownDataset(_)
                | Error::InvalidOption(_)
                | Error::Parameter(_)
                | Error::Parse(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
