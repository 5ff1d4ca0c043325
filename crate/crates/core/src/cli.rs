//! Command-line front end.
//!
//! Exit codes: `0` when every check passes (or the sweep finds exactly the
//! known exceptions), `1` when a computation contradicts a proven bound, `2`
//! for usage errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::lcm_engine::{lcm_range, lcm_upto_table, psi_from_lcm, to_natural, PsiValue, RangeLcmRequest};
use crate::report::{campaign_to_json, suites_to_json, write_campaign_csv, write_suites_csv, ReportError};
use crate::verifier::{
    identity_suite, run_campaign, run_suite, CampaignReport, FamilyFilter, RangeMode, Suite,
    SuiteOutcome, SweepConfig,
};
use crate::IntPoly;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISCREPANCY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Fallback for `--parallelism`.
pub const THREADS_ENV: &str = "LCMLAB_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    #[default]
    Plain,
}

#[derive(Debug, Parser)]
#[command(name = "lcmlab", version, about = "Exact lcm bounds for polynomial sequences")]
pub struct Cli {
    #[command(flatten)]
    pub config: CliConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct CliConfig {
    /// Output format.
    #[arg(long = "format", value_enum, default_value_t = OutputFormat::Plain, global = true)]
    pub output_format: OutputFormat,
    /// Write the report to this file instead of stdout.
    #[arg(long = "output", global = true)]
    pub output_path: Option<PathBuf>,
    /// Worker threads (defaults to $LCMLAB_THREADS, then the number of CPUs).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub parallelism: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact lcm of f(m), ..., f(n).
    Lcm {
        /// Comma-separated coefficients, constant term first ("1,0,1" is x^2 + 1).
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
    },
    /// Sweep a polynomial family and compare the failures of the 2^n bound
    /// against the known exceptions.
    VerifyTheorem {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_degree: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        coeff_max: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        /// Take the lcm over 1 <= i <= n instead of ceil(n/2) <= i <= n.
        #[arg(long)]
        full_range: bool,
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
    },
    /// Check the finite-difference identity for all 1 <= m <= n.
    VerifyIdentity {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m_max: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
    },
    /// Chebyshev psi(n) = log lcm(1..n).
    Psi {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Print every value from 1 to n.
        #[arg(long)]
        table: bool,
    },
    /// Run one bound suite.
    ///
    /// Suites: lemma22, lemma-key, key1, key2, nair, hanson, half-range-ln,
    /// identity. The limit is the largest n (lemma22, nair, hanson,
    /// half-range-ln, identity), the number of random cases (lemma-key), the
    /// largest m (key1) or the bound on a and b (key2).
    BoundsReport {
        #[arg(long, value_parser = suite_parser())]
        suite: Suite,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        limit: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    All,
    MonicOnly,
    NonzeroConstantTerm,
}

impl From<FilterArg> for FamilyFilter {
    fn from(f: FilterArg) -> Self {
        match f {
            FilterArg::All => FamilyFilter::All,
            FilterArg::MonicOnly => FamilyFilter::MonicOnly,
            FilterArg::NonzeroConstantTerm => FamilyFilter::NonzeroConstantTerm,
        }
    }
}

fn suite_parser() -> impl clap::builder::TypedValueParser<Value = Suite> {
    use clap::builder::TypedValueParser;
    clap::builder::PossibleValuesParser::new(Suite::ALL.map(|s| s.name()))
        .map(|s| s.parse::<Suite>().expect("restricted to known suite names"))
}

enum Failure {
    Usage(String),
    Report(ReportError),
}

impl From<ReportError> for Failure {
    fn from(e: ReportError) -> Self {
        Failure::Report(e)
    }
}

struct Outcome {
    body: String,
    code: i32,
}

fn resolve_threads(cfg: &CliConfig) -> Result<Option<usize>, Failure> {
    if let Some(p) = cfg.parallelism {
        return Ok(Some(p as usize));
    }
    match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Some(n)),
            _ => Err(Failure::Usage(format!("{THREADS_ENV} must be a positive integer, got `{v}`"))),
        },
        Err(_) => Ok(None),
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    let result = resolve_threads(&cli.config).and_then(|threads| {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(t) = threads {
            builder = builder.num_threads(t);
        }
        let pool = builder
            .build()
            .map_err(|e| Failure::Usage(format!("cannot start thread pool: {e}")))?;
        pool.install(|| dispatch(&cli))
    });
    match result {
        Ok(outcome) => match emit(&cli.config, &outcome.body, stdout) {
            Ok(()) => outcome.code,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                EXIT_USAGE
            }
        },
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Report(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn emit(cfg: &CliConfig, body: &str, stdout: &mut dyn Write) -> std::io::Result<()> {
    match &cfg.output_path {
        Some(path) => std::fs::write(path, body),
        None => stdout.write_all(body.as_bytes()),
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, Failure> {
    let format = cli.config.output_format;
    match &cli.command {
        Command::Lcm { poly, m, n } => cmd_lcm(format, poly, *m, *n),
        Command::VerifyTheorem {
            max_degree,
            coeff_max,
            n_max,
            full_range,
            filter,
        } => {
            let mode = if *full_range { RangeMode::Full } else { RangeMode::Half };
            let cfg = SweepConfig::new(*max_degree as usize, *coeff_max, *n_max)
                .with_range_mode(mode)
                .with_filter((*filter).into());
            cmd_verify_theorem(format, &cfg)
        }
        Command::VerifyIdentity { m_max, n_max } => {
            let outcome = identity_suite(*m_max, *n_max);
            let plain = format!(
                "{} identities verified, {} failures\n",
                outcome.checked - outcome.failures,
                outcome.failures
            );
            suite_outcome(format, outcome, plain)
        }
        Command::Psi { n, table } => cmd_psi(format, *n, *table),
        Command::BoundsReport { suite, limit } => {
            let outcome = run_suite(*suite, *limit);
            let plain = format!(
                "{}: {} checked, {} failures\n",
                outcome.suite, outcome.checked, outcome.failures
            );
            suite_outcome(format, outcome, plain)
        }
    }
}

fn suite_outcome(format: OutputFormat, outcome: SuiteOutcome, mut plain: String) -> Result<Outcome, Failure> {
    let code = if outcome.passed() { EXIT_OK } else { EXIT_DISCREPANCY };
    let body = match format {
        OutputFormat::Plain => {
            if let Some(c) = &outcome.first_counterexample {
                let _ = writeln!(plain, "first counterexample: {c}");
            }
            plain
        }
        OutputFormat::Json => suites_to_json(std::slice::from_ref(&outcome))? + "\n",
        OutputFormat::Csv => {
            let mut buf = Vec::new();
            write_suites_csv(std::slice::from_ref(&outcome), &mut buf)?;
            String::from_utf8(buf).expect("csv output is utf-8")
        }
    };
    Ok(Outcome { body, code })
}

#[derive(Serialize)]
struct LcmJson {
    coeffs: Vec<String>,
    m: u64,
    n: u64,
    lcm: String,
}

fn cmd_lcm(format: OutputFormat, poly: &str, m: u64, n: u64) -> Result<Outcome, Failure> {
    let f = IntPoly::parse_coeff_list(poly).map_err(|e| Failure::Usage(format!("--poly: {e}")))?;
    let req = RangeLcmRequest::new(f, m, n).map_err(|e| Failure::Usage(e.to_string()))?;
    let lcm = to_natural(lcm_range(&req));
    let coeffs: Vec<String> = req.f().coeffs().iter().map(BigInt::to_string).collect();
    let body = match format {
        OutputFormat::Plain => format!("{lcm}\n"),
        OutputFormat::Json => {
            let doc = LcmJson {
                coeffs,
                m,
                n,
                lcm: lcm.to_string(),
            };
            serde_json::to_string_pretty(&doc).map_err(ReportError::from)? + "\n"
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["coeffs", "m", "n", "lcm"]).map_err(ReportError::from)?;
            w.write_record([coeffs.join(","), m.to_string(), n.to_string(), lcm.to_string()])
                .map_err(ReportError::from)?;
            String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
        }
    };
    Ok(Outcome { body, code: EXIT_OK })
}

fn plain_campaign(report: &CampaignReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "checked {} (f, n) pairs in {:.3} s",
        report.checked_count,
        report.duration.as_secs_f64()
    );
    let _ = writeln!(s, "exceptions ({}):", report.exceptions.len());
    for e in &report.exceptions {
        let _ = writeln!(s, "  f = {}, n = {}: lcm = {} < {}", e.f, e.n, e.lcm_value, e.threshold);
    }
    if let Some(note) = report.truncation_note() {
        let _ = writeln!(s, "note: {note}");
    }
    let verdict = if report.matches_prediction() { "yes" } else { "NO" };
    let _ = writeln!(s, "matches known exception set: {verdict}");
    s
}

fn cmd_verify_theorem(format: OutputFormat, cfg: &SweepConfig) -> Result<Outcome, Failure> {
    let report = run_campaign(cfg).map_err(|e| Failure::Usage(e.to_string()))?;
    let code = if report.matches_prediction() { EXIT_OK } else { EXIT_DISCREPANCY };
    let body = match format {
        OutputFormat::Plain => plain_campaign(&report),
        OutputFormat::Json => campaign_to_json(&report)? + "\n",
        OutputFormat::Csv => {
            let mut buf = Vec::new();
            write_campaign_csv(&report, &mut buf)?;
            String::from_utf8(buf).expect("csv output is utf-8")
        }
    };
    Ok(Outcome { body, code })
}

#[derive(Serialize)]
struct PsiJson {
    n: u64,
    lcm: String,
    psi: f64,
    bits: u64,
}

impl From<&PsiValue> for PsiJson {
    fn from(p: &PsiValue) -> Self {
        Self {
            n: p.n,
            lcm: p.lcm_value.to_string(),
            psi: p.log_value,
            bits: p.bit_length,
        }
    }
}

fn cmd_psi(format: OutputFormat, n: u64, table: bool) -> Result<Outcome, Failure> {
    let lcms = lcm_upto_table(n);
    let values: Vec<PsiValue> = if table {
        lcms.into_iter()
            .enumerate()
            .map(|(i, l)| psi_from_lcm(i as u64 + 1, l))
            .collect()
    } else {
        vec![psi_from_lcm(n, lcms.into_iter().last().expect("n >= 1"))]
    };
    let body = match format {
        OutputFormat::Plain if table => {
            let mut s = String::from("n\tbits\tpsi\tpsi/n\n");
            for v in &values {
                let _ = writeln!(
                    s,
                    "{}\t{}\t{:.6}\t{:.6}",
                    v.n,
                    v.bit_length,
                    v.log_value,
                    v.log_value / v.n as f64
                );
            }
            s
        }
        OutputFormat::Plain => {
            let v = &values[0];
            format!("lcm={} psi={:.6} bits={}\n", v.lcm_value, v.log_value, v.bit_length)
        }
        OutputFormat::Json => {
            let docs: Vec<PsiJson> = values.iter().map(PsiJson::from).collect();
            let text = if table {
                serde_json::to_string_pretty(&docs)
            } else {
                serde_json::to_string_pretty(&docs[0])
            };
            text.map_err(ReportError::from)? + "\n"
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for v in &values {
                w.serialize(PsiJson::from(v)).map_err(ReportError::from)?;
            }
            String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
        }
    };
    Ok(Outcome { body, code: EXIT_OK })
}
