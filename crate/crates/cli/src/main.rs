//! `hyperid`: list catalog identities, run seeded verification campaigns,
//! evaluate single series and check the Bailey-transform derivations.
//!
//! Exit codes: 0 when every trial passes, 1 on any failure or evaluation
//! error, 2 on usage or configuration errors.

mod report;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use hyperid_core::bailey::{self, SetupKind};
use hyperid_core::catalog::{self, IdentityDef, CATALOG, DEFAULT_DIGITS};
use hyperid_core::series::{
    eval_nonterminating, eval_terminating, parse_params, Argument, SeriesSpec,
};
use hyperid_core::Error;

use report::{BaileyFailure, BaileyReport, Format, OrderedMap, VerificationReport};

/// Environment variable that overrides `--workers`.
const WORKERS_ENV: &str = "HYPERID_WORKERS";

#[derive(Parser, Debug)]
#[command(
    name = "hyperid",
    version,
    about = "Exact verification of hypergeometric summation and transformation identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List catalog identities.
    List,
    /// Verify catalog identities on seeded random instances.
    Verify {
        /// Identity ids (comma separated or repeated), or `all`.
        #[arg(long = "id", value_delimiter = ',', default_value = "all")]
        ids: Vec<String>,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long = "max-n", default_value_t = 20)]
        max_n: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Decimal digits for non-terminating identities.
        #[arg(long, default_value_t = DEFAULT_DIGITS)]
        digits: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Evaluate one series.
    Eval {
        /// Numerator parameters, e.g. `1/2,1/3,-2`; `x~L` is the pair x ± √L.
        #[arg(long, allow_hyphen_values = true)]
        num: String,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        den: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        z: String,
        /// Terminate at index N (a numerator must equal −N).
        #[arg(long = "N")]
        n: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_DIGITS)]
        digits: u32,
    },
    /// Check the Bailey transform derivations on seeded instances.
    Bailey {
        #[arg(long, value_enum)]
        setup: SetupArg,
        #[arg(long, default_value_t = 50)]
        trials: u64,
        #[arg(long = "max-n", default_value_t = 20)]
        max_n: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(clap::Args, Debug)]
struct OutputArgs {
    /// Worker threads (overridden by HYPERID_WORKERS).
    #[arg(long)]
    workers: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SetupArg {
    First,
    Second,
}

impl From<SetupArg> for SetupKind {
    fn from(s: SetupArg) -> SetupKind {
        match s {
            SetupArg::First => SetupKind::First,
            SetupArg::Second => SetupKind::Second,
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Eval(Error),
    #[error("cannot write report: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Eval(_) | CliError::Io(_) => 1,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::List => {
            print!("{}", list());
            Ok(true)
        }
        Command::Verify {
            ids,
            trials,
            max_n,
            seed,
            digits,
            output,
        } => verify(&ids, trials, max_n, seed, digits, &output),
        Command::Eval {
            num,
            den,
            z,
            n,
            digits,
        } => eval(&num, &den, &z, n, digits),
        Command::Bailey {
            setup,
            trials,
            max_n,
            seed,
            output,
        } => run_bailey(setup.into(), trials, max_n, seed, &output),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("hyperid: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn list() -> String {
    let mut out = String::new();
    for d in CATALOG.iter() {
        out.push_str(&format!(
            "{:<26} {:<23} {:<16} ({}) {}\n",
            d.id,
            d.kind.as_str(),
            d.structure.as_str(),
            d.param_names().join(", "),
            d.title
        ));
    }
    out.push_str(&format!("{} identities\n", CATALOG.len()));
    out
}

fn worker_pool(requested: Option<usize>) -> Result<rayon::ThreadPool, CliError> {
    let from_env = match std::env::var(WORKERS_ENV) {
        Ok(v) => Some(v.trim().parse::<usize>().map_err(|_| {
            CliError::Usage(format!(
                "{WORKERS_ENV} must be a positive integer, got `{v}`"
            ))
        })?),
        Err(_) => None,
    };
    let workers = from_env.or(requested).unwrap_or(0);
    if (from_env.is_some() || requested.is_some()) && workers == 0 {
        return Err(CliError::Usage(String::from(
            "worker count must be at least 1",
        )));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn resolve_ids(ids: &[String]) -> Result<Vec<&'static IdentityDef>, CliError> {
    if ids.iter().any(|i| i == "all") {
        return Ok(CATALOG.iter().collect());
    }
    ids.iter()
        .map(|i| catalog::lookup(i).map_err(|e| CliError::Usage(e.to_string())))
        .collect()
}

fn verify(
    ids: &[String],
    trials: u64,
    max_n: u64,
    seed: u64,
    digits: u32,
    output: &OutputArgs,
) -> Result<bool, CliError> {
    if trials < 1 {
        return Err(CliError::Usage(String::from("--trials must be at least 1")));
    }
    if digits < 6 {
        return Err(CliError::Usage(String::from("--digits must be at least 6")));
    }
    let defs = resolve_ids(ids)?;
    let pool = worker_pool(output.workers)?;
    let reports: Vec<VerificationReport> = defs
        .iter()
        .map(|def| {
            let start = Instant::now();
            let results: Vec<_> = pool.install(|| {
                (0..trials)
                    .into_par_iter()
                    .map(|i| catalog::run_trial(def, seed, i, max_n, digits))
                    .collect()
            });
            VerificationReport::from_trials(
                def.id,
                seed,
                &results,
                start.elapsed().as_millis() as u64,
            )
        })
        .collect();
    emit(
        &report::render_verification(&reports, output.format),
        &output.out,
    )?;
    Ok(reports.iter().all(VerificationReport::ok))
}

fn eval(num: &str, den: &str, z: &str, n: Option<u64>, digits: u32) -> Result<bool, CliError> {
    let usage = |e: Error| CliError::Usage(e.to_string());
    if digits < 6 {
        return Err(CliError::Usage(String::from("--digits must be at least 6")));
    }
    let numerators = parse_params(num).map_err(usage)?;
    let denominators = parse_params(den).map_err(usage)?;
    let z: Argument = z.parse().map_err(usage)?;
    let mut spec = SeriesSpec::new(numerators, denominators, z, n);
    if spec.termination.is_none() {
        spec.termination = spec.natural_termination();
    }
    let value = if spec.termination.is_some() {
        eval_terminating(&spec).map(|v| v.to_string())
    } else {
        eval_nonterminating(&spec, digits).map(|v| v.to_decimal(digits as usize))
    };
    match value {
        Ok(v) => {
            println!("{v}");
            Ok(true)
        }
        Err(e @ (Error::Parse(_) | Error::InvalidSeries(_))) => Err(CliError::Usage(e.to_string())),
        Err(e) => Err(CliError::Eval(e)),
    }
}

fn run_bailey(
    kind: SetupKind,
    trials: u64,
    max_n: u64,
    seed: u64,
    output: &OutputArgs,
) -> Result<bool, CliError> {
    if trials < 1 {
        return Err(CliError::Usage(String::from("--trials must be at least 1")));
    }
    let pool = worker_pool(output.workers)?;
    let start = Instant::now();
    let results: Vec<_> = pool.install(|| {
        (0..trials)
            .into_par_iter()
            .map(|i| (i, bailey::run_trial(kind, seed, i, max_n)))
            .collect()
    });
    let mut rep = BaileyReport {
        setup: kind.as_str().to_string(),
        identity: kind.catalog_id().to_string(),
        seed,
        trials,
        ..Default::default()
    };
    for (i, r) in results {
        match r {
            Ok(t) => {
                rep.rejected_degenerate += t.rejections;
                rep.transform_passes += t.transform as u64;
                rep.catalog_matches += t.catalog_match as u64;
                rep.beta_checks += t.beta_checks;
                rep.beta_passes += t.beta_passes;
                rep.gamma_checks += t.gamma_checks;
                rep.gamma_passes += t.gamma_passes;
                if t.pass() {
                    rep.passes += 1;
                } else {
                    rep.failures.push(BaileyFailure {
                        trial: i,
                        assignment: OrderedMap::from(&t.assignment),
                        transform: Some(t.transform),
                        catalog_match: Some(t.catalog_match),
                        error: None,
                    });
                }
            }
            Err(e) => rep.failures.push(BaileyFailure {
                trial: i,
                assignment: OrderedMap::default(),
                transform: None,
                catalog_match: None,
                error: Some(e.to_string()),
            }),
        }
    }
    rep.elapsed_ms = start.elapsed().as_millis() as u64;
    emit(&report::render_bailey(&rep, output.format), &output.out)?;
    Ok(rep.ok())
}
