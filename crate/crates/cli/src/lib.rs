//! Command layer for the `weylgen` binary.
//!
//! [`run`] parses arguments and returns the exit code together with the text
//! destined for stdout and stderr, so tests can drive it in-process.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or domain error,
//! 3 internal failure (for example a non-integral numerator).

pub mod render;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use weylgen::{
    antisymmetric_determinantal, fundamental_cone, hilbert_series, reduce_univariate, specialize,
    symmetric_determinantal, verify_equivalence, ConeSpec, Error, EulerRational, Family,
    ProblemSpec, RootSystem, SimpleFactor, Weight,
};

pub use render::{Format, OutputDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

const DEFAULT_BOUND: usize = 5;

#[derive(Debug, Parser)]
#[command(name = "weylgen", version, about = "Generating functions for Weyl dimensions over lattice cones")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weyl dimension of one highest weight.
    Dim {
        #[command(flatten)]
        group: GroupArgs,
        /// Fundamental-weight coordinates, e.g. `2,0,0`.
        #[arg(long)]
        weight: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Multi-variate generating function of a cone.
    Series {
        #[command(flatten)]
        cone: ConeArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Collapse the series to one variable and reduce it.
    Specialize {
        #[command(flatten)]
        cone: ConeArgs,
        /// Degree of each generator, e.g. `1,2`; defaults to all ones.
        #[arg(long)]
        grading: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare series coefficients with direct dimension counts.
    Check {
        #[command(flatten)]
        cone: ConeArgs,
        /// Largest multiplicity per generator, e.g. `5,5`; a single value applies to all.
        #[arg(long)]
        bounds: Option<String>,
        /// Check a series read from this JSON document instead of computing one.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a named problem.
    Preset {
        #[arg(value_enum)]
        name: PresetName,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Root system for `fundamental`.
        #[arg(long = "type")]
        family: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, value_enum, default_value = "series")]
        action: PresetAction,
        #[arg(long)]
        bounds: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// One or more simple factors, given as repeated `--type X --rank N` pairs.
#[derive(Debug, Args)]
pub struct GroupArgs {
    /// Cartan type A-G; repeat for a product.
    #[arg(long = "type", required = true)]
    pub family: Vec<String>,
    #[arg(long, required = true)]
    pub rank: Vec<usize>,
}

#[derive(Debug, Args)]
pub struct ConeArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Generators separated by `;`, coordinates by `,`, e.g. `3,0;0,3`.
    #[arg(long)]
    pub weights: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PresetName {
    SymDet,
    AntisymDet,
    Fundamental,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PresetAction {
    Series,
    Specialize,
    Check,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Core(Error::Internal(_)) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) => m.clone(),
            CliError::Core(e) => e.to_string(),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli.command) {
        Ok((doc, code)) => Outcome { code, stdout: format!("{}\n", doc.body), stderr: String::new() },
        Err(e) => Outcome { code: e.code(), stdout: String::new(), stderr: format!("error: {}\n", e.message()) },
    }
}

fn execute(cmd: &Command) -> CliResult<(OutputDocument, i32)> {
    match cmd {
        Command::Dim { group, weight, format } => {
            let rs = root_system(group)?;
            let w = Weight::new(parse_ints(weight, "weight")?);
            let d = rs.weyl_dim(&w)?;
            let body = match format {
                Format::Json => to_json(&render::dim_json(&d)),
                _ => d.to_string(),
            };
            Ok((OutputDocument { format: *format, body }, EXIT_OK))
        }
        Command::Series { cone, format } => {
            let cone = cone_spec(cone)?;
            series_doc(&hilbert_series(&cone)?, *format)
        }
        Command::Specialize { cone, grading, format } => {
            let cone = cone_spec(cone)?;
            let grading = match grading {
                Some(g) => parse_unsigned(g, "grading")?,
                None => vec![1; cone.k()],
            };
            specialize_doc(&hilbert_series(&cone)?, &grading, *format)
        }
        Command::Check { cone, bounds, input, format } => {
            let cone = cone_spec(cone)?;
            let f = match input {
                Some(path) => read_series(path)?,
                None => hilbert_series(&cone)?,
            };
            check_doc(&f, &cone, bounds.as_deref(), *format)
        }
        Command::Preset { name, n, k, family, rank, action, bounds, format } => {
            let spec = preset(*name, *n, *k, family.as_deref(), *rank)?;
            let f = hilbert_series(&spec.cone)?;
            match action {
                PresetAction::Series => series_doc(&f, *format),
                PresetAction::Specialize => specialize_doc(&f, &spec.grading, *format),
                PresetAction::Check => check_doc(&f, &spec.cone, bounds.as_deref(), *format),
            }
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

fn series_doc(f: &EulerRational, format: Format) -> CliResult<(OutputDocument, i32)> {
    let body = match format {
        Format::Text => render::series_text(f),
        Format::Latex => render::series_latex(f),
        Format::Json => to_json(&render::series_json(f)),
    };
    Ok((OutputDocument { format, body }, EXIT_OK))
}

fn specialize_doc(f: &EulerRational, grading: &[u32], format: Format) -> CliResult<(OutputDocument, i32)> {
    let reduced = reduce_univariate(&specialize(f, grading)?)?;
    let body = match format {
        Format::Text => render::reduced_text(&reduced),
        Format::Latex => render::reduced_latex(&reduced),
        Format::Json => to_json(&render::reduced_json(&reduced)),
    };
    Ok((OutputDocument { format, body }, EXIT_OK))
}

fn check_doc(
    f: &EulerRational,
    cone: &ConeSpec,
    bounds: Option<&str>,
    format: Format,
) -> CliResult<(OutputDocument, i32)> {
    let bounds = match bounds {
        None => vec![DEFAULT_BOUND; cone.k()],
        Some(b) => {
            let v: Vec<usize> = parse_unsigned(b, "bounds")?.into_iter().map(|x| x as usize).collect();
            if v.len() == 1 {
                vec![v[0]; cone.k()]
            } else {
                v
            }
        }
    };
    let report = verify_equivalence(f, cone, &bounds)?;
    let body = match format {
        Format::Json => to_json(&render::report_json(&report)),
        _ => render::report_text(&report),
    };
    let code = if report.passed() { EXIT_OK } else { EXIT_MISMATCH };
    Ok((OutputDocument { format, body }, code))
}

fn read_series(path: &PathBuf) -> CliResult<EulerRational> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let doc: render::SeriesJson =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    render::series_from_json(&doc).map_err(CliError::Usage)
}

fn preset(
    name: PresetName,
    n: Option<usize>,
    k: Option<usize>,
    family: Option<&str>,
    rank: Option<usize>,
) -> CliResult<ProblemSpec> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| CliError::Usage(format!("this preset needs --{flag}")));
    Ok(match name {
        PresetName::SymDet => symmetric_determinantal(need(n, "n")?, need(k, "k")?)?,
        PresetName::AntisymDet => antisymmetric_determinantal(need(n, "n")?, need(k, "k")?)?,
        PresetName::Fundamental => {
            let family = family.ok_or_else(|| CliError::Usage("this preset needs --type".into()))?;
            let rs = RootSystem::simple(family.parse()?, need(rank, "rank")?)?;
            fundamental_cone(rs)?
        }
    })
}

fn root_system(group: &GroupArgs) -> CliResult<RootSystem> {
    if group.family.len() != group.rank.len() {
        return usage(format!(
            "got {} --type and {} --rank values; give them in pairs",
            group.family.len(),
            group.rank.len()
        ));
    }
    let factors = group
        .family
        .iter()
        .zip(&group.rank)
        .map(|(f, &r)| SimpleFactor::new(f.parse::<Family>()?, r))
        .collect::<weylgen::Result<Vec<_>>>()?;
    Ok(RootSystem::new(&factors)?)
}

fn cone_spec(args: &ConeArgs) -> CliResult<ConeSpec> {
    let rs = root_system(&args.group)?;
    let gens = args
        .weights
        .split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_ints(s, "weights").map(Weight::new))
        .collect::<CliResult<Vec<_>>>()?;
    Ok(ConeSpec::new(rs, gens)?)
}

fn parse_ints(s: &str, what: &str) -> CliResult<Vec<i64>> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| CliError::Usage(format!("--{what}: expected comma-separated integers, got `{s}`")))
}

fn parse_unsigned(s: &str, what: &str) -> CliResult<Vec<u32>> {
    s.split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| CliError::Usage(format!("--{what}: expected comma-separated non-negative integers, got `{s}`")))
}
