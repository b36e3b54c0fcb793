//! `qctrap`: command-line surface for the piecewise trapezoid-to-rectangle
//! map — reflection-coefficient bound reports, point mapping, numerical
//! verification suites, bound-comparison tables, and SVG grid renderings.
//!
//! Exit codes are a stable contract: `0` success, `1` verification or I/O
//! failure, `2` usage or domain error. All outputs are deterministic:
//! identical parameters produce byte-identical text, JSON, CSV, and SVG.

mod output;
mod report;
mod svg;
mod verify;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qctrap_core::bounds::{self, ScanSpacing};
use qctrap_core::{qcmap, Parallelogram, PlanePoint, Trapezoid, Window};

/// Everything that can go wrong after argument parsing, with its exit code.
#[derive(Debug)]
enum CliError {
    /// Invalid parameter values or combinations — exit 2.
    Domain(String),
    /// A computation failed to converge or produced no result — exit 1.
    Failure(String),
    /// Output could not be written — exit 1.
    Io {
        path: String,
        source: std::io::Error,
    },
    /// Verification ran to completion and at least one check failed — exit 1.
    ChecksFailed { failed: usize, total: usize },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 2,
            CliError::Failure(_) | CliError::Io { .. } | CliError::ChecksFailed { .. } => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Domain(msg) | CliError::Failure(msg) => f.write_str(msg),
            CliError::Io { path, source } => write!(f, "failed to write {path}: {source}"),
            CliError::ChecksFailed { failed, total } => {
                write!(f, "{failed} of {total} verification checks failed")
            }
        }
    }
}

impl From<qctrap_core::Error> for CliError {
    fn from(e: qctrap_core::Error) -> Self {
        match e {
            qctrap_core::Error::Domain(_) => CliError::Domain(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

/// Output format; each subcommand accepts a subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Svg,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Svg => "svg",
        }
    }
}

/// Rejects formats a subcommand does not produce, with a usage-style error.
fn require_format(command: &str, got: Format, allowed: &[Format]) -> Result<(), CliError> {
    if allowed.contains(&got) {
        return Ok(());
    }
    let names: Vec<&str> = allowed.iter().map(|f| f.name()).collect();
    Err(CliError::Domain(format!(
        "{command} supports --format {} (got {})",
        names.join("|"),
        got.name()
    )))
}

/// Numerical toolkit for a piecewise quasiconformal map from an isosceles
/// trapezoid onto a rectangle: bound reports, point mapping, verification
/// suites, comparison tables, and grid-distortion renderings.
#[derive(Parser)]
#[command(name = "qctrap", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the reflection-coefficient bounds for one shape.
    Bounds(BoundsArgs),
    /// Map one point through the piecewise map (or its inverse).
    Map(MapArgs),
    /// Run the numerical verification suites and report per-check margins.
    Verify(VerifyArgs),
    /// Tabulate the bounds across a range of top-base half-lengths.
    Scan(ScanArgs),
    /// Render the image of a Cartesian grid as an SVG drawing.
    GridSvg(GridSvgArgs),
}

#[derive(Args)]
struct BoundsArgs {
    /// Acute base angle as a fraction of pi (0 < alpha <= 0.5; strictly
    /// below 0.5 with --parallelogram).
    #[arg(long)]
    alpha: f64,
    /// Half-length of the trapezoid's longer base (d > cot(pi*alpha)).
    #[arg(long, conflicts_with_all = ["a", "parallelogram"])]
    d: Option<f64>,
    /// Length of the parallelogram's horizontal sides (a > cot(pi*alpha)).
    #[arg(long, requires = "parallelogram")]
    a: Option<f64>,
    /// Evaluate the parallelogram bound instead of the trapezoid report.
    #[arg(long, requires = "a")]
    parallelogram: bool,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MapArgs {
    /// Acute base angle as a fraction of pi (0 < alpha <= 0.5).
    #[arg(long)]
    alpha: f64,
    /// Half-length of the trapezoid's longer base (d > cot(pi*alpha)).
    #[arg(long)]
    d: f64,
    /// First coordinate of the point (u with --inverse).
    #[arg(long, allow_hyphen_values = true)]
    x: f64,
    /// Second coordinate of the point (v with --inverse).
    #[arg(long, allow_hyphen_values = true)]
    y: f64,
    /// Map from the rectangle picture back to the trapezoid picture.
    #[arg(long)]
    inverse: bool,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Acute base angle as a fraction of pi (0 < alpha <= 0.5).
    #[arg(long)]
    alpha: f64,
    /// Half-length of the trapezoid's longer base (d > cot(pi*alpha)).
    #[arg(long)]
    d: f64,
    /// Per-axis resolution of the dilatation grid scan.
    #[arg(long, default_value_t = 512)]
    resolution: usize,
    /// Tolerance for the continuity, equivalence, and round-trip checks.
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ScanArgs {
    /// Acute base angle as a fraction of pi (0 < alpha <= 0.5).
    #[arg(long)]
    alpha: f64,
    /// Smallest top-base half-length in the sweep.
    #[arg(long, default_value_t = 0.1)]
    c_min: f64,
    /// Largest top-base half-length in the sweep.
    #[arg(long, default_value_t = 10.0)]
    c_max: f64,
    /// Number of rows.
    #[arg(long, default_value_t = 200)]
    n: usize,
    /// Space the c values logarithmically instead of uniformly.
    #[arg(long)]
    log_spacing: bool,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GridSvgArgs {
    /// Acute base angle as a fraction of pi (0 < alpha <= 0.5).
    #[arg(long)]
    alpha: f64,
    /// Half-length of the trapezoid's longer base (d > cot(pi*alpha)).
    #[arg(long)]
    d: f64,
    /// Number of grid lines per direction (window edges included).
    #[arg(long, default_value_t = 24)]
    n: usize,
    /// Sampling window "x_min,x_max,y_min,y_max"; defaults to the standard
    /// analysis window [-3d, 3d] x [-2, 3].
    #[arg(long, allow_hyphen_values = true)]
    window: Option<String>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Svg)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Bounds(args) => run_bounds(args),
        Command::Map(args) => run_map(args),
        Command::Verify(args) => run_verify(args),
        Command::Scan(args) => run_scan(args),
        Command::GridSvg(args) => run_grid_svg(args),
    }
}

fn run_bounds(args: BoundsArgs) -> Result<(), CliError> {
    require_format("bounds", args.format, &[Format::Text, Format::Json])?;
    let content = if args.parallelogram {
        let a = args.a.expect("clap ties --parallelogram to --a");
        let pg = Parallelogram::new(args.alpha, a)?;
        let upper_new = bounds::upper_bound_parallelogram(&pg);
        match args.format {
            Format::Text => report::parallelogram_text(&pg, upper_new),
            Format::Json => report::parallelogram_report(&pg, upper_new).to_json(),
            _ => unreachable!("format was validated above"),
        }
    } else {
        let d = args.d.ok_or_else(|| {
            CliError::Domain(
                "either --d (trapezoid) or --parallelogram --a (parallelogram) is required"
                    .to_string(),
            )
        })?;
        let t = Trapezoid::new(args.alpha, d)?;
        let r = bounds::report(&t);
        match args.format {
            Format::Text => report::bounds_text(&r),
            Format::Json => report::bounds_report(&r).to_json(),
            _ => unreachable!("format was validated above"),
        }
    };
    output::emit(args.out.as_deref(), &content)
}

fn run_map(args: MapArgs) -> Result<(), CliError> {
    require_format("map", args.format, &[Format::Text, Format::Json])?;
    if !(args.x.is_finite() && args.y.is_finite()) {
        return Err(CliError::Domain(format!(
            "point coordinates must be finite (got ({}, {}))",
            args.x, args.y
        )));
    }
    let t = Trapezoid::new(args.alpha, args.d)?;
    let p = PlanePoint::new(args.x, args.y);
    let eval = if args.inverse {
        qcmap::inverse(&t, p)
    } else {
        qcmap::forward(&t, p)
    };
    let content = match args.format {
        Format::Text => report::map_text(&eval, args.inverse),
        Format::Json => report::map_report(&t, &eval, args.inverse).to_json(),
        _ => unreachable!("format was validated above"),
    };
    output::emit(args.out.as_deref(), &content)
}

fn run_verify(args: VerifyArgs) -> Result<(), CliError> {
    require_format("verify", args.format, &[Format::Text, Format::Json])?;
    if !(args.tol.is_finite() && args.tol > 0.0) {
        return Err(CliError::Domain(format!(
            "tolerance must be positive and finite (got {})",
            args.tol
        )));
    }
    let t = Trapezoid::new(args.alpha, args.d)?;
    let checks = verify::run_checks(&t, args.resolution, args.tol)?;
    let failed = checks.iter().filter(|c| !c.pass).count();
    let total = checks.len();
    let content = match args.format {
        Format::Text => report::verify_text(&t, &checks),
        Format::Json => report::verify_report(&t, args.resolution, args.tol, checks).to_json(),
        _ => unreachable!("format was validated above"),
    };
    // The report is always emitted, pass or fail; the exit code carries the
    // verdict.
    output::emit(args.out.as_deref(), &content)?;
    if failed > 0 {
        Err(CliError::ChecksFailed { failed, total })
    } else {
        Ok(())
    }
}

fn run_scan(args: ScanArgs) -> Result<(), CliError> {
    require_format("scan", args.format, &[Format::Csv, Format::Json])?;
    let spacing = if args.log_spacing {
        ScanSpacing::Log
    } else {
        ScanSpacing::Uniform
    };
    let rows = bounds::compare_scan(args.alpha, args.c_min, args.c_max, args.n, spacing)?;
    let content = match args.format {
        Format::Csv => report::scan_csv(&rows),
        Format::Json => report::scan_report(
            args.alpha,
            args.c_min,
            args.c_max,
            args.n,
            args.log_spacing,
            &rows,
        )
        .to_json(),
        _ => unreachable!("format was validated above"),
    };
    output::emit(args.out.as_deref(), &content)
}

/// Parses a window given as four comma-separated reals.
fn parse_window(raw: &str) -> Result<Window, CliError> {
    let parts: Vec<&str> = raw.split(',').collect();
    if parts.len() != 4 {
        return Err(CliError::Domain(format!(
            "--window needs four comma-separated values \"x_min,x_max,y_min,y_max\" (got \"{raw}\")"
        )));
    }
    let mut values = [0.0f64; 4];
    for (slot, part) in values.iter_mut().zip(&parts) {
        *slot = part.trim().parse().map_err(|_| {
            CliError::Domain(format!("--window component \"{part}\" is not a number"))
        })?;
    }
    Ok(Window::new(values[0], values[1], values[2], values[3])?)
}

fn run_grid_svg(args: GridSvgArgs) -> Result<(), CliError> {
    require_format("grid-svg", args.format, &[Format::Svg])?;
    let t = Trapezoid::new(args.alpha, args.d)?;
    let window = match &args.window {
        Some(raw) => parse_window(raw)?,
        None => Window::default_for(&t),
    };
    let content = svg::render(&t, args.n, window)?;
    output::emit(args.out.as_deref(), &content)
}
