//! Command-line driver for `motcell-core`: fan files, text/JSON/DOT output
//! and the cross-oracle check suites.

pub mod checks;
pub mod fanfile;
pub mod report;

use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use motcell_core::parabolic::flag_torus_model;
use motcell_core::rootsys::dominant_regular_cocharacter;
use motcell_core::{
    bb_cells, bruhat_hasse, build_root_system, generic_cocharacter, group_strata, h_vector,
    minimal_coset_reps, poincare_polynomial, quadric_paper_ledger, quadric_torus_model,
    schubert_cells, toric_torus_model, Family, ParabolicSubset, QuadricSpec, RootSystemSpec,
    TorusModel, DEFAULT_WEYL_CAP,
};
use serde::Serialize;

use crate::checks::Suite;
use crate::report::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Coordinate bound for the automatic generic cocharacter search.
pub const AUTO_LAMBDA_BOUND: i64 = 1_000_000;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] motcell_core::Error),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("unknown suite {0:?}; expected one of {names}", names = Suite::NAMES.join(", "))]
    UnknownSuite(String),
    #[error("invalid quadric: n must be at least 1")]
    InvalidQuadric,
    #[error("unknown builtin fan {0:?}; expected p<n>, f<a> or a product such as p2xp1")]
    UnknownBuiltin(String),
    #[error("{0}")]
    Usage(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl From<motcell_core::FanError> for CliError {
    fn from(e: motcell_core::FanError) -> Self {
        CliError::Core(e.into())
    }
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.kind(),
            CliError::Io { .. } => "IoError",
            CliError::UnknownSuite(_) => "UnknownSuite",
            CliError::InvalidQuadric => "InvalidSpec",
            CliError::UnknownBuiltin(_) => "UnknownBuiltin",
            CliError::Usage(_) => "UsageError",
            CliError::Internal(_) => "InternalError",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Internal(_) => EXIT_INTERNAL,
            _ => EXIT_VALIDATION,
        }
    }
}

fn core_err<E: Into<motcell_core::Error>>(e: E) -> CliError {
    CliError::Core(e.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

/// `auto` or an explicit comma-separated integer vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LambdaSpec {
    Auto,
    Explicit(Vec<i64>),
}

impl FromStr for LambdaSpec {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s.trim() == "auto" {
            return Ok(LambdaSpec::Auto);
        }
        s.split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|e| format!("bad coordinate {x:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()
            .map(LambdaSpec::Explicit)
    }
}

#[derive(Debug, Parser)]
#[command(name = "motcell", version, about = "Cell structures of varieties with torus actions")]
pub struct Cli {
    /// Output format; dot is only available for `gp`.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Schubert and BB cells of a flag variety G/P.
    Gp(GpArgs),
    /// BB cells of a smooth complete toric variety.
    Toric(ToricArgs),
    /// Cells and ledgers of the split quadric Q_2n.
    Quadric(QuadricArgs),
    /// Bruhat strata of a split reductive group.
    Group(GroupArgs),
    /// Run a cross-oracle suite.
    Check(CheckArgs),
}

#[derive(Debug, Args)]
pub struct GpArgs {
    #[arg(long, value_parser = Family::from_str)]
    pub family: Family,
    #[arg(long)]
    pub rank: usize,
    /// Comma-separated 1-based simple roots kept in the Levi factor (empty: P = B).
    #[arg(long, value_delimiter = ',')]
    pub parabolic: Vec<usize>,
    /// Maximal parabolic obtained by removing this node.
    #[arg(long, conflicts_with = "parabolic")]
    pub maximal: Option<usize>,
    #[arg(long, default_value = "auto", allow_hyphen_values = true)]
    pub lambda: LambdaSpec,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "source")]
pub struct ToricSource {
    #[arg(long, group = "source")]
    pub fan: Option<PathBuf>,
    #[arg(long, group = "source")]
    pub builtin: Option<String>,
}

#[derive(Debug, Args)]
pub struct ToricArgs {
    #[command(flatten)]
    pub source: ToricSource,
    #[arg(long, default_value = "auto", allow_hyphen_values = true)]
    pub lambda: LambdaSpec,
}

#[derive(Debug, Args)]
pub struct QuadricArgs {
    #[arg(long)]
    pub n: usize,
    /// Replace the cell ledger by the two-stage ledger through `P^n`.
    #[arg(long)]
    pub paper_ledger: bool,
    #[arg(long, default_value = "auto", allow_hyphen_values = true)]
    pub lambda: LambdaSpec,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    #[arg(long, value_parser = Family::from_str)]
    pub family: Family,
    #[arg(long)]
    pub rank: usize,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub suite: String,
}

/// What one invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct ErrorDocument<'a> {
    error: ErrorBody<'a>,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
    exit_code: i32,
}

fn failure(e: &CliError, format: Format) -> Outcome {
    let code = e.exit_code();
    let stderr = if format == Format::Json {
        let doc = ErrorDocument { error: ErrorBody { kind: e.kind(), message: e.to_string(), exit_code: code } };
        serde_json::to_string(&doc).expect("error documents serialize") + "\n"
    } else {
        format!("error[{}]: {e}\n", e.kind())
    };
    Outcome { code, stdout: String::new(), stderr }
}

/// Cap on Weyl group enumeration, overridable through `MOTCELL_CAP`.
pub fn weyl_cap() -> Result<usize, CliError> {
    match std::env::var("MOTCELL_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("MOTCELL_CAP must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_WEYL_CAP),
    }
}

/// Parses arguments (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: rendered, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: rendered }
            };
        }
    };
    run(&cli)
}

/// Runs a parsed command. Panics inside the computation are reported as
/// internal errors rather than crashing with partial output.
pub fn run(cli: &Cli) -> Outcome {
    let result = panic::catch_unwind(AssertUnwindSafe(|| execute(cli)));
    match result {
        Ok(Ok((code, stdout))) => Outcome { code, stdout, stderr: String::new() },
        Ok(Err(e)) => failure(&e, cli.format),
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            failure(&CliError::Internal(message), cli.format)
        }
    }
}

fn execute(cli: &Cli) -> Result<(i32, String), CliError> {
    if cli.format == Format::Dot && !matches!(cli.command, Command::Gp(_)) {
        return Err(CliError::Usage("--format dot is only available for gp".into()));
    }
    let cap = weyl_cap()?;
    match &cli.command {
        Command::Gp(a) => gp(a, cli.format, cap).map(|s| (EXIT_OK, s)),
        Command::Toric(a) => toric(a, cli.format).map(|s| (EXIT_OK, s)),
        Command::Quadric(a) => quadric(a, cli.format).map(|s| (EXIT_OK, s)),
        Command::Group(a) => group(a, cli.format, cap).map(|s| (EXIT_OK, s)),
        Command::Check(a) => {
            let suite: Suite = a.suite.parse().map_err(CliError::UnknownSuite)?;
            let r = checks::run_suite(suite, cap);
            let code = if r.passed { EXIT_OK } else { EXIT_VALIDATION };
            let out = match cli.format {
                Format::Json => serde_json::to_string_pretty(&r).expect("reports serialize") + "\n",
                _ => r.to_text(),
            };
            Ok((code, out))
        }
    }
}

fn emit(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json() + "\n",
        _ => report.to_text(),
    }
}

fn resolve_lambda(model: &TorusModel, spec: &LambdaSpec) -> Result<Vec<i64>, CliError> {
    match spec {
        LambdaSpec::Auto => generic_cocharacter(model, AUTO_LAMBDA_BOUND).map_err(core_err),
        LambdaSpec::Explicit(v) => Ok(v.clone()),
    }
}

fn gp(a: &GpArgs, format: Format, cap: usize) -> Result<String, CliError> {
    let rs = build_root_system(RootSystemSpec::new(a.family, a.rank).map_err(core_err)?);
    let p = match a.maximal {
        Some(node) => {
            if node == 0 || node > a.rank {
                return Err(core_err(motcell_core::RootSystemError::IndexOutOfRange {
                    index: node,
                    rank: a.rank,
                }));
            }
            ParabolicSubset::maximal(a.rank, node)
        }
        None => ParabolicSubset::new(&a.parabolic),
    };
    p.validate(&rs).map_err(core_err)?;

    if format == Format::Dot {
        let reps = minimal_coset_reps(&rs, &p, cap).map_err(core_err)?;
        let hasse = bruhat_hasse(&rs, &reps);
        return Ok(report::hasse_dot(&p.quotient_name(&rs), &hasse));
    }

    let model = flag_torus_model(&rs, &p, cap).map_err(core_err)?;
    let (lambda, dominant) = match &a.lambda {
        LambdaSpec::Auto => (dominant_regular_cocharacter(&rs).0, true),
        LambdaSpec::Explicit(v) => (v.clone(), false),
    };
    let cells = motcell_core::order_filtration(bb_cells(&model, &lambda).map_err(core_err)?).0;
    if dominant {
        let schubert = schubert_cells(&rs, &p, cap).map_err(core_err)?;
        if schubert.dimensions() != cells.dimensions() {
            return Err(CliError::Internal(format!(
                "BB dimensions {:?} differ from Bruhat lengths {:?}",
                cells.dimensions(),
                schubert.dimensions()
            )));
        }
    }
    Ok(emit(&Report::from_cells(cells), format))
}

fn toric(a: &ToricArgs, format: Format) -> Result<String, CliError> {
    let fan = match (&a.source.fan, &a.source.builtin) {
        (Some(path), _) => fanfile::read_fan(path)?,
        (None, Some(name)) => {
            fanfile::builtin_fan(name).ok_or_else(|| CliError::UnknownBuiltin(name.clone()))?
        }
        (None, None) => return Err(CliError::Usage("one of --fan or --builtin is required".into())),
    };
    let model = toric_torus_model(&fan);
    let lambda = resolve_lambda(&model, &a.lambda)?;
    let cells = motcell_core::order_filtration(bb_cells(&model, &lambda).map_err(core_err)?).0;
    let h = h_vector(&fan);
    if poincare_polynomial(&cells) != h {
        return Err(CliError::Internal(format!(
            "cell polynomial {:?} differs from h-vector {h:?}",
            poincare_polynomial(&cells)
        )));
    }
    Ok(emit(&Report::from_cells(cells), format))
}

fn quadric(a: &QuadricArgs, format: Format) -> Result<String, CliError> {
    let spec = QuadricSpec::new(a.n).ok_or(CliError::InvalidQuadric)?;
    let model = quadric_torus_model(spec);
    let lambda = resolve_lambda(&model, &a.lambda)?;
    let cells = motcell_core::order_filtration(bb_cells(&model, &lambda).map_err(core_err)?).0;
    if poincare_polynomial(&cells) != motcell_core::quadric::quadric_poincare(spec) {
        return Err(CliError::Internal("quadric cells disagree with the closed form".into()));
    }
    let report = if a.paper_ledger {
        Report::with_ledger(cells, quadric_paper_ledger(spec))
    } else {
        Report::from_cells(cells)
    };
    Ok(emit(&report, format))
}

fn group(a: &GroupArgs, format: Format, cap: usize) -> Result<String, CliError> {
    let rs = build_root_system(RootSystemSpec::new(a.family, a.rank).map_err(core_err)?);
    let strata = group_strata(&rs, cap).map_err(core_err)?;
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&strata).expect("strata serialize") + "\n",
        _ => report::group_text(&strata),
    })
}
