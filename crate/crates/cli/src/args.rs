//! Argument surface: nine subcommands plus a global manifest path.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "equilib",
    version,
    about = "Equilibrium measures, logarithmic potentials, and confined totally real root data"
)]
pub struct Cli {
    /// Append the run manifest entry to this JSONL file.
    #[arg(long, global = true, default_value = "equilib_manifest.jsonl")]
    pub manifest: PathBuf,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Logarithmic potential of a measure at a point or along a profile.
    Potential(PotentialArgs),
    /// Logarithmic energy of a measure.
    Energy(EnergyArgs),
    /// Robin constant and capacity of an interval union.
    Capacity(CapacityArgs),
    /// Equilibrium measure of an interval union.
    Equilibrium(EquilibriumArgs),
    /// Check the potential non-negativity criterion over a segment.
    Check(CheckArgs),
    /// Atomize-and-dilate approximation ladder with a convergence report.
    Approximate(ApproximateArgs),
    /// Monic integer polynomials with all roots real in [-2 sqrt q, 2 sqrt q].
    Enumerate(EnumerateArgs),
    /// Lift a real trace to a complex number of absolute value sqrt q.
    Lift(LiftArgs),
    /// Root measure of a polynomial census.
    MeasureOf(MeasureOfArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Potential(_) => "potential",
            Command::Energy(_) => "energy",
            Command::Capacity(_) => "capacity",
            Command::Equilibrium(_) => "equilibrium",
            Command::Check(_) => "check",
            Command::Approximate(_) => "approximate",
            Command::Enumerate(_) => "enumerate",
            Command::Lift(_) => "lift",
            Command::MeasureOf(_) => "measure-of",
        }
    }
}

#[derive(Args)]
pub struct PotentialArgs {
    /// Measure JSON file.
    #[arg(long)]
    pub measure: PathBuf,
    /// Evaluation point, real part.
    #[arg(long, allow_negative_numbers = true)]
    pub x: Option<f64>,
    /// Evaluation point, imaginary part.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub y: f64,
    /// Profile over LO..HI with COUNT samples (CSV output, columns x,y,p).
    #[arg(long, num_args = 3, value_names = ["LO", "HI", "COUNT"], allow_negative_numbers = true)]
    pub grid: Option<Vec<f64>>,
    /// Imaginary part shared by all profile samples.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub im: f64,
    /// Output file (stdout when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct EnergyArgs {
    /// Measure JSON file.
    #[arg(long)]
    pub measure: PathBuf,
    /// Output file (stdout when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct CapacityArgs {
    /// Interval union: inline JSON like '{"intervals":[[-2,2]]}' or a path.
    #[arg(long)]
    pub compact: String,
    /// Panels per unit length for the discretization.
    #[arg(long, default_value_t = 300)]
    pub panels: usize,
    /// Output file (stdout when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct EquilibriumArgs {
    /// Interval union: inline JSON like '{"intervals":[[-2,2]]}' or a path.
    #[arg(long)]
    pub compact: String,
    /// Panels per unit length for the discretization.
    #[arg(long, default_value_t = 300)]
    pub panels: usize,
    /// Result JSON path.
    #[arg(long)]
    pub out: PathBuf,
    /// Sampled density CSV path (defaults to OUT with a _density.csv suffix).
    #[arg(long)]
    pub density_csv: Option<PathBuf>,
}

#[derive(Args)]
pub struct CheckArgs {
    /// Measure JSON file.
    #[arg(long)]
    pub measure: PathBuf,
    /// Segment endpoints LO HI.
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
    pub segment: Vec<f64>,
    /// Override the real-axis scan grid size.
    #[arg(long)]
    pub scan_points: Option<usize>,
    /// Override the pass tolerance on the potential minimum.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Output file (stdout when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct ApproximateArgs {
    /// Measure JSON file.
    #[arg(long)]
    pub measure: PathBuf,
    /// Segment endpoints LO HI.
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
    pub segment: Vec<f64>,
    /// Atom counts, comma separated (e.g. 4,16,64).
    #[arg(long, value_delimiter = ',')]
    pub ns: Vec<usize>,
    /// Panels per unit length for the equilibrium solves.
    #[arg(long, default_value_t = 300)]
    pub panels: usize,
    /// Prefix for the per-step density CSVs.
    #[arg(long, default_value = "approx_step")]
    pub csv_prefix: String,
    /// Output file (stdout when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct EnumerateArgs {
    /// Degree of the monic polynomials.
    #[arg(long)]
    pub degree: usize,
    /// Prime power fixing the segment [-2 sqrt q, 2 sqrt q].
    #[arg(long)]
    pub q: u64,
    /// Keep only polynomials irreducible over the rationals.
    #[arg(long)]
    pub irreducible_only: bool,
    /// Output file (stdout when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct LiftArgs {
    /// Real trace with |x| <= 2 sqrt q.
    #[arg(long, allow_negative_numbers = true)]
    pub x: f64,
    /// Prime power.
    #[arg(long)]
    pub q: u64,
    /// Output file (stdout when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct MeasureOfArgs {
    /// Census JSON: {"q": .., "polynomials": [{"coefficients": [..], "multiplicity": ..}]}.
    #[arg(long)]
    pub census: PathBuf,
    /// Count boundary roots at +-2 sqrt q twice before normalizing.
    #[arg(long)]
    pub double_boundary: bool,
    /// Output file (stdout when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
}
