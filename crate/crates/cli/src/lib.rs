//! Command-line front end: transforms, means, verification suites and
//! counterexample growth tables, all written as CSV.
//!
//! Every invocation is first turned into a [`RunConfig`], which has a
//! canonical TOML form. `vilenkin <command> --dump-config` prints it and
//! `vilenkin run <file>` executes it, so a run is reproducible from the
//! file alone.

use std::fmt;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use vilenkin::counterexample::{
    hp_norm_upper, lower_bound_integral, make_alphas, AlphaSequence, CounterexampleSpec, Exponent, Operator,
};
use vilenkin::random::{random_spectrum, seeded};
use vilenkin::summability::{direct, maximal_mean, mean, MeanKind, WeightSeq};
use vilenkin::transform::{analyze, fast_analyze, fast_synthesize, synthesize, GridFunction, Spectrum};
use vilenkin::verify::{rng_label, run_suite, Suite};
use vilenkin::{GroupSpec, LogMagnitude};

/// Largest deviation `--compare-oracle` accepts.
pub const ORACLE_TOL: f64 = 1e-12;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or config; names the offending field.
    Usage(String),
    /// A value does not fit the requested number format.
    Overflow(String),
    Runtime(anyhow::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Overflow(_) => 3,
            CliError::Runtime(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Overflow(m) => write!(f, "numeric overflow: {m}"),
            CliError::Runtime(e) => write!(f, "error: {e:#}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<vilenkin::Error> for CliError {
    fn from(e: vilenkin::Error) -> Self {
        match e {
            vilenkin::Error::Overflow(what) => CliError::Overflow(what.to_string()),
            other => CliError::Runtime(other.into()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Runtime(e.into())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Runtime(e.into())
    }
}

fn usage(field: &str, msg: impl fmt::Display) -> CliError {
    CliError::Usage(format!("field `{field}`: {msg}"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Precision {
    Float,
    Exact,
    LogDomain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Analyze,
    Synthesize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Backend {
    Naive,
    Fast,
}

/// Command-specific parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "kebab-case", deny_unknown_fields)]
pub enum CommandConfig {
    Transform {
        input: PathBuf,
        direction: Direction,
        backend: Backend,
    },
    Means {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        input: Option<PathBuf>,
        kind: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        cap: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        weights: Option<Vec<f64>>,
        #[serde(default)]
        compare_oracle: bool,
    },
    Verify {
        suite: String,
    },
    Counterexample {
        p: String,
        operator: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        terms: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        alphas: Option<Vec<u32>>,
    },
}

/// A complete, validated description of one run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub group: String,
    pub seed: u64,
    pub precision: Precision,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    pub command: CommandConfig,
}

impl RunConfig {
    /// Checks every field and rewrites the group in canonical form.
    pub fn validated(mut self) -> Result<Self, CliError> {
        let group: GroupSpec = self.group.parse().map_err(|e| usage("group", e))?;
        self.group = group.to_string();
        match &self.command {
            CommandConfig::Transform { .. } => {
                if self.precision != Precision::Float {
                    return Err(usage("precision", "transform runs in float precision"));
                }
            }
            CommandConfig::Means { kind, n, cap, weights, .. } => {
                if self.precision != Precision::Float {
                    return Err(usage("precision", "means run in float precision"));
                }
                parse_kind(kind, weights.as_deref())?;
                if n.is_some() == cap.is_some() {
                    return Err(usage("n", "give exactly one of `n` and `cap`"));
                }
            }
            CommandConfig::Verify { suite } => {
                parse_suites(suite)?;
                if self.precision == Precision::LogDomain {
                    return Err(usage("precision", "verify runs in float or exact precision"));
                }
            }
            CommandConfig::Counterexample { p, operator, terms, alphas } => {
                p.parse::<Exponent>().map_err(|e| usage("p", e))?;
                operator.parse::<Operator>().map_err(|e| usage("operator", e))?;
                if terms.is_some() == alphas.is_some() {
                    return Err(usage("terms", "give exactly one of `terms` and `alphas`"));
                }
                if *terms == Some(0) {
                    return Err(usage("terms", "must be at least 1"));
                }
                if self.precision == Precision::Exact {
                    return Err(usage("precision", "counterexample runs in float or log-domain precision"));
                }
            }
        }
        Ok(self)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        let cfg: RunConfig = toml::from_str(text).map_err(|e| CliError::Usage(format!("config: {}", e.message())))?;
        cfg.validated()
    }

    pub fn group(&self) -> GroupSpec {
        self.group.parse().expect("validated")
    }
}

fn parse_kind(kind: &str, weights: Option<&[f64]>) -> Result<MeanKind<f64>, CliError> {
    match (kind, weights) {
        ("norlund_general", Some(w)) => {
            Ok(MeanKind::NorlundGeneral(WeightSeq::new(w.to_vec()).map_err(|e| usage("weights", e))?))
        }
        ("norlund_general", None) => Err(usage("weights", "norlund_general needs weights")),
        (_, Some(_)) => Err(usage("weights", "weights only apply to norlund_general")),
        (k, None) => k.parse().map_err(|e| usage("kind", e)),
    }
}

fn parse_suites(s: &str) -> Result<Vec<Suite>, CliError> {
    if s == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    Ok(vec![s.parse().map_err(|e| usage("suite", e))?])
}

#[derive(Debug, Parser)]
#[command(name = "vilenkin", version, about = "Vilenkin-Fourier analysis and summability on bounded Vilenkin groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Cmd,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Group as `walsh(N)` or `radices = [..], depth = N`
    #[arg(long, default_value = "walsh(8)")]
    pub group: String,
    /// Seed for random inputs
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file; standard output when absent
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Print the canonical config instead of running
    #[arg(long)]
    pub dump_config: bool,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Forward or inverse transform of a CSV grid
    Transform {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "analyze")]
        direction: Direction,
        #[arg(long, value_enum, default_value = "fast")]
        backend: Backend,
    },
    /// A summability mean or its truncated maximal function
    Means {
        #[command(flatten)]
        common: Common,
        /// Spectrum CSV; a seeded random spectrum when absent
        #[arg(long)]
        input: Option<PathBuf>,
        /// partial, fejer, riesz_log, norlund_log or norlund_general
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: Option<usize>,
        /// Maximal function over all admissible n up to the cap
        #[arg(long)]
        cap: Option<usize>,
        /// Comma-separated q_1, q_2, ... for norlund_general
        #[arg(long, value_delimiter = ',')]
        weights: Option<Vec<f64>>,
        /// Also evaluate the defining sums and report the deviation
        #[arg(long)]
        compare_oracle: bool,
    },
    /// Run an invariant suite and report pass/fail per property
    Verify {
        #[command(flatten)]
        common: Common,
        /// kernels, transform, means, counterexample or all
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value = "exact")]
        precision: Precision,
    },
    /// Growth table of the certified lower bounds
    Counterexample {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        p: String,
        #[arg(long, default_value = "riesz")]
        operator: String,
        /// Number of greedy alpha terms
        #[arg(long)]
        terms: Option<usize>,
        /// Explicit comma-separated alphas
        #[arg(long, value_delimiter = ',')]
        alphas: Option<Vec<u32>>,
        #[arg(long, value_enum, default_value = "log-domain")]
        precision: Precision,
    },
    /// Execute a saved config
    Run { config: PathBuf },
}

/// What the binary should do after parsing.
pub enum Plan {
    Dump(RunConfig),
    Execute(RunConfig),
}

pub fn plan(cli: Cli) -> Result<Plan, CliError> {
    let (common, precision, command) = match cli.command {
        Cmd::Run { config } => {
            let text = std::fs::read_to_string(&config)?;
            return Ok(Plan::Execute(RunConfig::from_toml(&text)?));
        }
        Cmd::Transform { common, input, direction, backend } => {
            (common, Precision::Float, CommandConfig::Transform { input, direction, backend })
        }
        Cmd::Means { common, input, kind, n, cap, weights, compare_oracle } => {
            (common, Precision::Float, CommandConfig::Means { input, kind, n, cap, weights, compare_oracle })
        }
        Cmd::Verify { common, suite, precision } => (common, precision, CommandConfig::Verify { suite }),
        Cmd::Counterexample { common, p, operator, terms, alphas, precision } => {
            (common, precision, CommandConfig::Counterexample { p, operator, terms, alphas })
        }
    };
    let cfg = RunConfig { group: common.group, seed: common.seed, precision, output: common.output, command }.validated()?;
    Ok(if common.dump_config { Plan::Dump(cfg) } else { Plan::Execute(cfg) })
}

/// Outcome of a run that produced its artifacts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// At least one named contract failed.
    Failed(Vec<String>),
}

/// Runs a config, writing CSV to its output (or `stdout`) and notes to
/// `notes`.
pub fn run(cfg: &RunConfig, stdout: &mut dyn Write, notes: &mut dyn Write) -> Result<Status, CliError> {
    match &cfg.output {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            let status = dispatch(cfg, &mut file, notes)?;
            file.flush()?;
            Ok(status)
        }
        None => dispatch(cfg, stdout, notes),
    }
}

fn dispatch(cfg: &RunConfig, out: &mut dyn Write, notes: &mut dyn Write) -> Result<Status, CliError> {
    let group = cfg.group();
    match &cfg.command {
        CommandConfig::Transform { input, direction, backend } => transform(&group, input, *direction, *backend, out),
        CommandConfig::Means { input, kind, n, cap, weights, compare_oracle } => {
            let kind = parse_kind(kind, weights.as_deref())?;
            means(cfg, &group, input.as_deref(), &kind, *n, *cap, *compare_oracle, out, notes)
        }
        CommandConfig::Verify { suite } => verify(&group, &parse_suites(suite)?, cfg.seed, out),
        CommandConfig::Counterexample { p, operator, terms, alphas } => {
            let p: Exponent = p.parse().map_err(|e| usage("p", e))?;
            let op: Operator = operator.parse().map_err(|e| usage("operator", e))?;
            let seq = match (terms, alphas) {
                (Some(t), _) => make_alphas(p, *t, group.radices())?,
                (_, Some(a)) => AlphaSequence::new(a.clone(), p).map_err(|e| usage("alphas", e))?,
                _ => unreachable!("validated"),
            };
            counterexample(&group, seq, op, cfg.precision, out)
        }
    }
}

fn read_input(path: &Path) -> Result<BufReader<File>, CliError> {
    File::open(path).map(BufReader::new).map_err(|e| usage("input", format!("{}: {e}", path.display())))
}

fn transform(g: &GroupSpec, input: &Path, dir: Direction, backend: Backend, out: &mut dyn Write) -> Result<Status, CliError> {
    match dir {
        Direction::Analyze => {
            let f = GridFunction::<f64>::read_csv(g, read_input(input)?)?;
            let s = match backend {
                Backend::Naive => analyze(&f),
                Backend::Fast => fast_analyze(&f),
            };
            s.write_csv(out)?;
        }
        Direction::Synthesize => {
            let s = Spectrum::<f64>::read_csv(g, read_input(input)?)?;
            let f = match backend {
                Backend::Naive => synthesize(&s),
                Backend::Fast => fast_synthesize(&s),
            };
            f.write_csv(out)?;
        }
    }
    Ok(Status::Ok)
}

#[allow(clippy::too_many_arguments)]
fn means(
    cfg: &RunConfig,
    g: &GroupSpec,
    input: Option<&Path>,
    kind: &MeanKind<f64>,
    n: Option<usize>,
    cap: Option<usize>,
    compare: bool,
    out: &mut dyn Write,
    notes: &mut dyn Write,
) -> Result<Status, CliError> {
    let s = match input {
        Some(path) => Spectrum::<f64>::read_csv(g, read_input(path)?)?,
        None => {
            writeln!(notes, "input: random spectrum from {}", rng_label(cfg.seed))?;
            random_spectrum(g, &mut seeded(cfg.seed))?
        }
    };
    let (fast, oracle) = match (n, cap) {
        (Some(n), _) => (
            mean(&s, kind, n).map_err(|e| usage("n", e))?,
            compare.then(|| direct::mean(&s, kind, n)).transpose()?,
        ),
        (_, Some(cap)) => (
            maximal_mean(&s, kind, cap).map_err(|e| usage("cap", e))?,
            compare.then(|| direct::maximal_mean(&s, kind, cap)).transpose()?,
        ),
        _ => unreachable!("validated"),
    };
    fast.write_csv(out)?;
    if let Some(oracle) = oracle {
        let dev = fast.max_abs_diff(&oracle);
        writeln!(notes, "max deviation from defining sums: {dev:.3e}")?;
        if !(dev <= ORACLE_TOL) {
            return Ok(Status::Failed(vec![format!("oracle deviation {dev:.3e} exceeds {ORACLE_TOL:.0e}")]));
        }
    }
    Ok(Status::Ok)
}

fn verify(g: &GroupSpec, suites: &[Suite], seed: u64, out: &mut dyn Write) -> Result<Status, CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["suite", "property", "passed", "detail", "rng"])?;
    let mut failed = Vec::new();
    for &suite in suites {
        for c in run_suite(suite, g, seed)? {
            if !c.passed {
                failed.push(format!("{}/{}", c.suite, c.property));
            }
            w.write_record([c.suite.to_string(), c.property.to_string(), c.passed.to_string(), c.detail, rng_label(seed)])?;
        }
    }
    w.flush()?;
    Ok(if failed.is_empty() { Status::Ok } else { Status::Failed(failed) })
}

fn format_value(v: LogMagnitude, precision: Precision, what: &str) -> Result<String, CliError> {
    match precision {
        Precision::LogDomain => Ok(v.to_sci_string()),
        _ => v.to_f64_checked().map(|x| format!("{x:e}")).ok_or_else(|| {
            CliError::Overflow(format!(
                "{what} is about 2^{:.1}, beyond the float range; rerun with --precision log-domain",
                v.log2()
            ))
        }),
    }
}

fn counterexample(
    g: &GroupSpec,
    seq: AlphaSequence,
    op: Operator,
    precision: Precision,
    out: &mut dyn Write,
) -> Result<Status, CliError> {
    let cs = CounterexampleSpec::minimal(g.radices(), seq)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "k",
        "alpha_k",
        "s_range",
        "min_annulus_bound",
        "max_annulus_bound",
        "lower_bound_integral",
        "log2_lower_bound_integral",
        "hp_norm_upper",
    ])?;
    for (k, &alpha) in cs.alphas().alphas().iter().enumerate() {
        let r = lower_bound_integral(&cs, k, op)?;
        let hp = hp_norm_upper(&cs, 2 * alpha as usize + 1)?;
        w.write_record([
            k.to_string(),
            alpha.to_string(),
            format!("{}:{}", r.s_range.start(), r.s_range.end()),
            format_value(r.min_certified(), precision, "min_annulus_bound")?,
            format_value(r.max_certified(), precision, "max_annulus_bound")?,
            format_value(r.value, precision, "lower_bound_integral")?,
            format!("{:.9}", r.value.log2()),
            format!("{hp:.12}"),
        ])?;
    }
    w.flush()?;
    // growth is tabulated rather than enforced: above the critical exponent none is expected
    Ok(Status::Ok)
}

impl FromStr for RunConfig {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        RunConfig::from_toml(s)
    }
}
