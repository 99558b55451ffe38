//! `medrad` — robust centrality and depth reports on the command line.
//!
//! Six verbs cover the toolkit's workflows:
//!
//! * `depth` — depth values for query points (JSON)
//! * `profile` — univariate radius profile over a grid (CSV + JSON)
//! * `gmedian` — geometric-median and radial-centre estimates (JSON)
//! * `contour` — scalar fields over a 2-D grid for contour plots (CSVs + JSON)
//! * `reproduce` — cross-method agreement table for a named scenario (CSV + JSON)
//! * `figure` — the data behind one of the seven study figures
//!
//! Conventions shared by every verb: input CSVs are rectangular and numeric
//! (`--header` skips one header line); artifacts are deterministic
//! byte-for-byte given identical flags; every JSON artifact embeds the
//! command (verb, flags, seed) that produced it; and stochastic work never
//! invents entropy — verbs that need randomness require `--seed` and fail
//! without it.
//!
//! Exit codes: 0 success; 1 input or usage error (unreadable or malformed
//! files, bad flags, a missing seed); 2 numeric failure (degenerate scale,
//! singular covariance, a centre that is not the radius minimizer, and
//! similar statistical dead ends).

mod dataset;
mod emit;
mod run;

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

// ----------------------------------------------------------------------
// errors and exit codes
// ----------------------------------------------------------------------

/// CLI failure, split by exit code: input and configuration problems exit
/// 1, numeric and statistical failures exit 2.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Numeric(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "input error: {msg}"),
            CliError::Numeric(msg) => write!(f, "numeric error: {msg}"),
        }
    }
}

impl From<medrad_core::Error> for CliError {
    fn from(e: medrad_core::Error) -> Self {
        use medrad_core::Error as E;
        match e {
            E::DegenerateScale
            | E::SingularCovariance
            | E::CenterNotMinimal { .. }
            | E::AllDirectionsDegenerate
            | E::ConstantInput
            | E::ZeroTotalWeight => CliError::Numeric(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

// ----------------------------------------------------------------------
// command-line surface
// ----------------------------------------------------------------------

#[derive(Parser)]
#[command(
    name = "medrad",
    version,
    about = "Robust centrality and depth reports from the median-radius functional"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Evaluate depth values at query points and write a JSON report.
    Depth(DepthArgs),
    /// Evaluate the univariate radius profile (G, H, subgradients,
    /// curvature) over a grid and write CSV + JSON.
    Profile(ProfileArgs),
    /// Estimate both centres (geometric median and radial centre) and
    /// write a JSON report.
    Gmedian(GmedianArgs),
    /// Evaluate scalar fields over a 2-D grid and write one CSV per layer
    /// plus a JSON summary.
    Contour(ContourArgs),
    /// Recompute a cross-method agreement table on a generated scenario
    /// and write CSV + JSON.
    Reproduce(ReproduceArgs),
    /// Recompute the data behind one of the seven study figures.
    Figure(FigureArgs),
}

/// Depth method selector shared by `depth` and `contour`.
#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum MethodTag {
    /// Median-radius depth.
    #[value(name = "mrd")]
    Mrd,
    /// Classical Mahalanobis depth.
    #[value(name = "mahalanobis")]
    Mahalanobis,
    /// Trimmed-estimate Mahalanobis depth (see --trim).
    #[value(name = "robust-mahalanobis")]
    RobustMahalanobis,
    /// Spatial (L1) depth.
    #[value(name = "spatial")]
    Spatial,
    /// Exact halfspace depth in two dimensions.
    #[value(name = "tukey2d")]
    Tukey2d,
    /// Exact simplicial depth in two dimensions.
    #[value(name = "simplicial2d")]
    Simplicial2d,
    /// Random-direction projection depth (see --n-dirs; requires --seed).
    #[value(name = "projection")]
    Projection,
}

/// Which centre estimate anchors the median-radius ratio.
#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum CenterChoice {
    /// Argmin of the median-radius functional (coordinate descent).
    #[value(name = "radial")]
    Radial,
    /// Geometric median (Weiszfeld iteration).
    #[value(name = "gmedian")]
    Gmedian,
}

#[derive(Debug, clap::Args)]
pub struct DepthArgs {
    /// Input data CSV (rows = observations, columns = coordinates).
    #[arg(long)]
    pub input: PathBuf,
    /// Treat the first line of each input CSV as a header and skip it.
    #[arg(long)]
    pub header: bool,
    /// Query points CSV; defaults to the input file itself.
    #[arg(long)]
    pub points: Option<PathBuf>,
    /// Depth method to evaluate (repeatable).
    #[arg(long = "method", value_enum, required = true)]
    pub methods: Vec<MethodTag>,
    /// Centre estimate used by the median-radius ratio.
    #[arg(long, value_enum, default_value = "radial")]
    pub center: CenterChoice,
    /// Trimming fraction for robust-mahalanobis, in [0, 0.5).
    #[arg(long, default_value_t = 0.25)]
    pub trim: f64,
    /// Number of random directions for projection depth.
    #[arg(long = "n-dirs", default_value_t = 1000)]
    pub n_dirs: usize,
    /// RNG seed; required when a requested method is stochastic.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output path stem (extensions are appended; a trailing .json/.csv
    /// on the stem is trimmed). Defaults to "depth".
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct ProfileArgs {
    /// Input data CSV; must have exactly one column.
    #[arg(long)]
    pub input: PathBuf,
    /// Treat the first line of the input CSV as a header and skip it.
    #[arg(long)]
    pub header: bool,
    /// Number of grid nodes.
    #[arg(long = "grid-n", default_value_t = 100)]
    pub grid_n: usize,
    /// Grid padding as a fraction of the data range on each side.
    #[arg(long, default_value_t = 0.1)]
    pub margin: f64,
    /// Output path stem. Defaults to "profile".
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct GmedianArgs {
    /// Input data CSV (rows = observations, columns = coordinates).
    #[arg(long)]
    pub input: PathBuf,
    /// Treat the first line of the input CSV as a header and skip it.
    #[arg(long)]
    pub header: bool,
    /// Output path stem. Defaults to "gmedian".
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct ContourArgs {
    /// Input data CSV; must have exactly two columns.
    #[arg(long)]
    pub input: PathBuf,
    /// Treat the first line of the input CSV as a header and skip it.
    #[arg(long)]
    pub header: bool,
    /// Depth method layer to evaluate (repeatable). The G and H fields
    /// are always included.
    #[arg(long = "method", value_enum)]
    pub methods: Vec<MethodTag>,
    /// Centre estimate used by the H field and the median-radius ratio.
    #[arg(long, value_enum, default_value = "radial")]
    pub center: CenterChoice,
    /// Trimming fraction for robust-mahalanobis, in [0, 0.5).
    #[arg(long, default_value_t = 0.25)]
    pub trim: f64,
    /// Number of random directions for projection depth.
    #[arg(long = "n-dirs", default_value_t = 1000)]
    pub n_dirs: usize,
    /// RNG seed; required when a requested method is stochastic.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Grid resolution per axis.
    #[arg(long = "grid-n", default_value_t = 100)]
    pub grid_n: usize,
    /// Grid padding as a fraction of the per-axis data range.
    #[arg(long, default_value_t = 0.1)]
    pub margin: f64,
    /// Output path stem. Defaults to "contour".
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct ReproduceArgs {
    /// Which agreement table to recompute: 1 gaussian, 2 skewed, 3 bimodal.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub table: u8,
    /// Sample size of the generated scenario.
    #[arg(long, default_value_t = 3000)]
    pub n: usize,
    /// RNG seed (the verb is stochastic, so this is mandatory).
    #[arg(long)]
    pub seed: u64,
    /// Output path stem. Defaults to "table-<N>".
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct FigureArgs {
    /// Figure id, 1 through 7.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=7))]
    pub id: u8,
    /// Sample size override (figure-specific default otherwise).
    #[arg(long)]
    pub n: Option<usize>,
    /// Dimension override (used by the high-dimension figure).
    #[arg(long)]
    pub d: Option<usize>,
    /// RNG seed; required for the stochastic figures (3 through 7).
    #[arg(long)]
    pub seed: Option<u64>,
    /// Grid resolution override.
    #[arg(long = "grid-n")]
    pub grid_n: Option<usize>,
    /// Output path stem. Defaults to "figure-<ID>".
    #[arg(long)]
    pub output: Option<PathBuf>,
}

// ----------------------------------------------------------------------
// entry point
// ----------------------------------------------------------------------

fn main() {
    std::process::exit(real_main());
}

fn real_main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match run::run(cli.command) {
        Ok(lines) => {
            for line in lines {
                println!("{line}");
            }
            0
        }
        Err(err) => {
            eprintln!("medrad: {err}");
            err.exit_code()
        }
    }
}

// ====== tests ======
