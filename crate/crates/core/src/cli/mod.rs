//! Command-line surface. Every command builds a [`RunReport`] and renders it
//! as an aligned text report or a single JSON document (`--format machine`).
//!
//! Exit codes: 0 success, 2 usage or input error, 3 internal invariant
//! violation (rank and tally disagree, RANDU recurrence broken).

pub mod report;
pub mod specfile;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::equidist::{lcg_full_cycle_tally, resolution_table, verify_equidist};
use crate::genlin::{certify_period, cycle_length, search_maximal, ShiftTemplate, DEFAULT_CYCLE_CAP};
use crate::lcg::{
    lcg_period, plane_count, plane_count_full_period, plane_spacing, randu_recurrence_check, spectral_search,
    LcgSpec, SpectralResult, RANDU_NORMAL,
};
use crate::stats::{log_equidist_probability, segment_chisq, SegmentMode};
use crate::stream::{CounterStream, F2Stream, LcgStream};

pub use report::{Payload, RunReport};
use report::{AnalyzePayload, ChisqPayload, PeriodPayload, RanduPayload, SearchHit, SearchPayload, SpectralPayload};
pub use specfile::{Generator, GeneratorSpecFile, SpecFileError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Debug, Parser)]
#[command(name = "f2lab", version, about = "Equidistribution, lattice and chi-square analysis of pseudo-random generators")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Seed override in hex: F2 state (coordinate 0 in the low bit) or LCG z0.
    #[arg(long, global = true)]
    pub seed: Option<String>,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Include wall time in the report (makes machine output non-reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Resolution table w_d, delta_d, Delta, W for an F2-linear generator.
    Analyze {
        spec: PathBuf,
        #[arg(long)]
        dmax: Option<usize>,
    },
    /// Compare the rank verdict with a full-cycle tally (n <= 20).
    Verify {
        spec: PathBuf,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        w: usize,
    },
    /// RANDU recurrence, planes and (3, 4) tally.
    Randu {
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long)]
        full_period: bool,
    },
    /// Two-tailed chi-square on M tuples.
    Chisq {
        spec: PathBuf,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        w: usize,
        #[arg(long = "M", alias = "m")]
        m: u64,
        #[arg(long, default_value_t = 0.01)]
        alpha: f64,
        #[arg(long, value_enum, default_value = "blocks")]
        mode: ModeArg,
    },
    /// Probability that 2^n random points are (d, w)-equidistributed.
    Prob {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        w: u32,
    },
    /// Shortest dual-lattice vector of an LCG within a coefficient bound.
    Spectral {
        spec: PathBuf,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        bound: u32,
    },
    /// Search xor-shift templates for maximal period 2^n - 1 (n <= 24).
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "left-right-left")]
        template: TemplateArg,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Cycle length from the seed plus the period certificate.
    Period {
        spec: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CYCLE_CAP)]
        cap: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Blocks,
    OverlapFull,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TemplateArg {
    LeftRight,
    LeftRightLeft,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Spec(#[from] SpecFileError),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invariant(_) => EXIT_INVARIANT,
            _ => EXIT_USAGE,
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

struct Loaded {
    generator: Generator,
    digest: String,
}

fn load(path: &PathBuf, seed: Option<&str>) -> Result<Loaded, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })?;
    let doc = GeneratorSpecFile::parse(&text)?;
    let mut generator = doc.build()?;
    if let Some(s) = seed {
        generator = generator.with_seed_hex(s)?;
    }
    let canonical = serde_json::to_string(&generator.to_doc()).expect("spec documents always serialize");
    let digest = hex::encode(Sha256::digest(canonical.as_bytes()));
    Ok(Loaded { generator, digest })
}

/// Runs one parsed command and returns its report.
pub fn execute(cli: &Cli) -> Result<RunReport, CliError> {
    let started = Instant::now();
    let seed = cli.seed.as_deref();
    let (command, digest, payload) = match &cli.command {
        Command::Analyze { spec, dmax } => {
            let l = load(spec, seed)?;
            let Generator::F2 { spec: g, .. } = &l.generator else {
                return Err(CliError::Usage("analyze needs an f2linear spec".into()));
            };
            let certificate = certify_period(g, None).map_err(usage)?;
            let report =
                resolution_table(g, dmax.unwrap_or(g.n()), certificate.is_maximal()).map_err(usage)?;
            ("analyze", Some(l.digest), Payload::Analyze(AnalyzePayload { certificate, report }))
        }
        Command::Verify { spec, d, w } => {
            let l = load(spec, seed)?;
            let Generator::F2 { spec: g, .. } = &l.generator else {
                return Err(CliError::Usage("verify needs an f2linear spec".into()));
            };
            let record = verify_equidist(g, *d, *w).map_err(usage)?;
            if !record.agree {
                return Err(CliError::Invariant(format!(
                    "rank verdict {} but tally verdict {} at (d, w) = ({d}, {w})",
                    record.rank_verdict, record.tally_verdict
                )));
            }
            ("verify", Some(l.digest), Payload::Verify(record))
        }
        Command::Randu { samples, full_period } => {
            let z0 = match seed {
                Some(s) => u64::from_str_radix(s.trim_start_matches("0x"), 16).map_err(usage)?,
                None => 1,
            };
            let spec = LcgSpec::randu(z0).map_err(usage)?;
            let violations = randu_recurrence_check(z0, *samples).map_err(usage)?;
            if violations != 0 {
                return Err(CliError::Invariant(format!("{violations} RANDU recurrence violations")));
            }
            let (planes, period, tally) = if *full_period {
                let (planes, period) = plane_count_full_period(&spec, RANDU_NORMAL).map_err(usage)?;
                let tally = lcg_full_cycle_tally(&spec, 3, 4).map_err(usage)?;
                (planes, Some(period), Some(report::summarize(&tally)))
            } else {
                (plane_count(&spec, RANDU_NORMAL, *samples).map_err(usage)?, None, None)
            };
            let planes: Vec<i64> = planes.into_iter().collect();
            (
                "randu",
                None,
                Payload::Randu(RanduPayload {
                    z0,
                    samples: *samples,
                    recurrence_windows: samples.saturating_sub(2),
                    recurrence_violations: violations,
                    normal: RANDU_NORMAL,
                    plane_count: planes.len(),
                    planes,
                    plane_spacing: plane_spacing(&RANDU_NORMAL).expect("nonzero normal"),
                    full_period: *full_period,
                    period,
                    tally_3_4: tally,
                }),
            )
        }
        Command::Chisq { spec, d, w, m, alpha, mode } => {
            let l = load(spec, seed)?;
            if !(0.0..=1.0).contains(alpha) {
                return Err(CliError::Usage(format!("alpha = {alpha} outside [0, 1]")));
            }
            let mode = match mode {
                ModeArg::Blocks => SegmentMode::Blocks,
                ModeArg::OverlapFull => SegmentMode::OverlapFull,
            };
            let result = match &l.generator {
                Generator::F2 { spec, seed } => segment_chisq(&mut F2Stream::new(spec, seed), *d, *w, *m, mode),
                Generator::Lcg { spec, .. } => segment_chisq(&mut LcgStream::new(*spec), *d, *w, *m, mode),
                Generator::Counter { n, .. } => {
                    segment_chisq(&mut CounterStream::new(*n as u32), *d, *w, *m, mode)
                }
            }
            .map_err(usage)?;
            (
                "chisq",
                Some(l.digest),
                Payload::Chisq(ChisqPayload {
                    d: *d,
                    w: *w,
                    m: *m,
                    mode,
                    alpha: *alpha,
                    decision: result.decide(*alpha),
                    result,
                }),
            )
        }
        Command::Prob { n, d, w } => {
            let p = log_equidist_probability(*n, *d, *w).map_err(usage)?;
            ("prob", None, Payload::Prob(p))
        }
        Command::Spectral { spec, d, bound } => {
            let l = load(spec, seed)?;
            let Generator::Lcg { spec: g, .. } = &l.generator else {
                return Err(CliError::Usage("spectral needs an lcg spec".into()));
            };
            let result = spectral_search(g, *d, *bound).map_err(usage)?;
            let spacing = match &result {
                SpectralResult::Found { vector } => Some(vector.spacing()),
                SpectralResult::BoundTooSmall { .. } => None,
            };
            (
                "spectral",
                Some(l.digest),
                Payload::Spectral(SpectralPayload { d: *d, bound: *bound, result, spacing }),
            )
        }
        Command::Search { n, template, budget } => {
            let template = match template {
                TemplateArg::LeftRight => ShiftTemplate::LeftRight,
                TemplateArg::LeftRightLeft => ShiftTemplate::LeftRightLeft,
            };
            let budget = budget.unwrap_or((*n as u64).pow(3));
            let hits = search_maximal(*n, template, budget).map_err(usage)?;
            let hits = hits
                .into_iter()
                .map(|h| SearchHit {
                    amounts: h.amounts,
                    period: h.period,
                    tag: h.tag.to_string(),
                    spec: Generator::F2 { seed: h.spec.default_seed(), spec: h.spec }.to_doc(),
                })
                .collect();
            ("search", None, Payload::Search(SearchPayload { n: *n, template, budget, hits }))
        }
        Command::Period { spec, cap } => {
            let l = load(spec, seed)?;
            let payload = match &l.generator {
                Generator::F2 { spec: g, seed } => PeriodPayload {
                    generator: "f2linear".into(),
                    cycle_length: cycle_length(g, seed, *cap).map_err(usage)?,
                    maximal: (g.n() < 64).then(|| (1u64 << g.n()) - 1),
                    certificate: Some(certify_period(g, None).map_err(usage)?),
                },
                Generator::Lcg { spec: g, .. } => PeriodPayload {
                    generator: "lcg".into(),
                    cycle_length: match lcg_period(g, *cap as u128) {
                        Ok(t) => crate::genlin::CycleLength::Exact(t),
                        Err(_) => crate::genlin::CycleLength::ExceedsCap(*cap),
                    },
                    maximal: None,
                    certificate: None,
                },
                Generator::Counter { n, .. } => PeriodPayload {
                    generator: "counter".into(),
                    cycle_length: crate::genlin::CycleLength::Exact(1u64 << n),
                    maximal: Some(1u64 << n),
                    certificate: None,
                },
            };
            ("period", Some(l.digest), Payload::Period(payload))
        }
    };
    Ok(RunReport {
        command: command.to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        spec_digest: digest,
        payload,
        wall_time_ms: cli.timing.then(|| started.elapsed().as_secs_f64() * 1e3),
    })
}

pub fn render(cli: &Cli, report: &RunReport) -> String {
    match cli.format {
        Format::Text => report.to_text(),
        Format::Machine => report.to_machine(),
    }
}

/// Parses `args`, runs the command and writes the rendered report (or an
/// error message) to `out` / `err`. Returns the process exit code. Nothing is
/// written to `out` unless the command succeeds.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let text = render(&cli, &report);
            match &cli.output {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                        return EXIT_USAGE;
                    }
                }
                None => {
                    let _ = out.write_all(text.as_bytes());
                }
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
