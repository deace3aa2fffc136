use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Parser)]
#[command(name = "morse", version, about = "Morse oscillator spectra, dipoles, level sets and pulse plans")]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(subcommand)]
    pub command: Command,
}

/// Options shared by every command. Unset values fall back to the config
/// file, then to the built-in defaults.
#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// Inverse range of the potential [default: 2]
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    /// Equilibrium position [default: 1]
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub x0: Option<f64>,
    /// Particle mass [default: 1]
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub mass: Option<f64>,
    /// Reduced Planck constant [default: 1]
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub hbar: Option<f64>,
    /// Grid step [default: 1e-3]
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub h: Option<f64>,
    /// Right end of the domain [default: 12]
    #[arg(long = "x-max", global = true, allow_negative_numbers = true)]
    pub x_max: Option<f64>,
    /// Stretch the domain until the highest requested level has decayed
    #[arg(long = "adaptive-domain", global = true)]
    pub adaptive_domain: bool,
    /// Bisection tolerance relative to max(1, |E|) [default: 1e-9]
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub tolerance: Option<f64>,
    /// Output format [default: csv]
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Output file [default: standard output]
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// key=value file with defaults for any long option
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Spectra {
    /// Closed-form energies; dipoles still come from the solver
    Analytic,
    /// Energies and dipoles from the shooting solver
    Shooting,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Bound-state energies: shooting, finite-difference and closed form
    Spectrum(SweepArgs),
    /// Transition dipole <0|x|1> per depth
    Dipole(SweepArgs),
    /// Normalized eigenfunctions on the solver grid
    Wavefunction(WavefunctionArgs),
    /// Constant-energy curve of a two-mode product state
    Levelset(LevelsetArgs),
    /// Rotation and resonant pulses between two product states
    Plan(PlanArgs),
}

/// Depth selection: a single value, an explicit list or a range.
#[derive(Debug, Clone, Default, Args)]
pub struct SweepArgs {
    /// Single well depth
    #[arg(long, allow_negative_numbers = true)]
    pub c: Option<f64>,
    #[arg(long = "c-min", allow_negative_numbers = true)]
    pub c_min: Option<f64>,
    #[arg(long = "c-max", allow_negative_numbers = true)]
    pub c_max: Option<f64>,
    #[arg(long = "c-step", allow_negative_numbers = true)]
    pub c_step: Option<f64>,
    /// Comma-separated depths
    #[arg(long = "c-list", allow_hyphen_values = true)]
    pub c_list: Option<String>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct WavefunctionArgs {
    /// Well depth [default: 10]
    #[arg(long, allow_negative_numbers = true)]
    pub c: Option<f64>,
    /// Comma-separated levels [default: 0,1]
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<String>,
    /// Keep every k-th grid point [default: 1]
    #[arg(long)]
    pub decimate: Option<usize>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct ModeArgs {
    /// Depth of mode 1 [default: 10]
    #[arg(long, allow_negative_numbers = true)]
    pub c1: Option<f64>,
    /// Depth of mode 2 [default: 12]
    #[arg(long, allow_negative_numbers = true)]
    pub c2: Option<f64>,
    /// Where the two-level energies come from [default: analytic]
    #[arg(long, value_enum)]
    pub spectra: Option<Spectra>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct LevelsetArgs {
    #[command(flatten)]
    pub modes: ModeArgs,
    /// Target energy expectation
    #[arg(long, allow_negative_numbers = true)]
    pub energy: Option<f64>,
    /// Points on a full ellipse [default: 256]
    #[arg(long)]
    pub samples: Option<usize>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct PlanArgs {
    #[command(flatten)]
    pub modes: ModeArgs,
    /// Initial rotation angles theta1,theta2
    #[arg(long = "from-angles", allow_hyphen_values = true)]
    pub from_angles: Option<String>,
    /// Final rotation angles theta1,theta2
    #[arg(long = "to-angles", allow_hyphen_values = true)]
    pub to_angles: Option<String>,
    /// Field amplitude [default: 1]
    #[arg(long, allow_negative_numbers = true)]
    pub amplitude: Option<f64>,
}
