use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dyonstark::HalfInteger;

#[derive(Debug, Parser)]
#[command(name = "dyonstark", version, about = "Spectrum, wavefunctions and linear Stark effect of a charge bound to a Dirac dyon")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Unperturbed levels and their spherical states, shells |s|+1 ..= max-n.
    Spectrum {
        #[command(flatten)]
        physics: PhysicsArgs,
        #[arg(long, default_value = "4")]
        max_n: HalfInteger,
    },
    /// First-order Stark shifts of every parabolic state in shell n.
    Shifts {
        #[command(flatten)]
        physics: PhysicsArgs,
        #[arg(long)]
        n: HalfInteger,
        #[arg(long, default_value_t = 1.0)]
        epsilon: f64,
    },
    /// Width of the split shell: full spread and the spread at fixed m.
    Splitting {
        #[command(flatten)]
        physics: PhysicsArgs,
        #[arg(long)]
        n: HalfInteger,
        #[arg(long, default_value_t = 1.0)]
        epsilon: f64,
    },
    /// Permanent dipole of every parabolic state in shell n.
    Dipole {
        #[command(flatten)]
        physics: PhysicsArgs,
        #[arg(long)]
        n: HalfInteger,
    },
    /// Sample one wavefunction along a ray r = 0 ..= r-max at fixed (θ, φ).
    Wavefunction {
        #[command(flatten)]
        physics: PhysicsArgs,
        #[arg(long)]
        n: HalfInteger,
        #[arg(long, value_enum, default_value_t = Basis::Parabolic)]
        basis: Basis,
        /// Total angular momentum (spherical basis).
        #[arg(long, required_if_eq("basis", "spherical"))]
        j: Option<HalfInteger>,
        /// Parabolic quantum numbers (parabolic basis).
        #[arg(long, default_value_t = 0)]
        n1: u32,
        #[arg(long, default_value_t = 0)]
        n2: u32,
        #[arg(long)]
        m: HalfInteger,
        #[arg(long, default_value_t = std::f64::consts::FRAC_PI_2)]
        theta: f64,
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
        /// In units of the Bohr radius.
        #[arg(long, default_value_t = 20.0)]
        r_max: f64,
        #[arg(long, default_value_t = 101)]
        points: usize,
    },
    /// Run every consistency check; exits 3 on any breach.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_n: u32,
        #[arg(long, env = "DYONSTARK_QUAD_ORDER", default_value_t = 48)]
        quad_order: usize,
        /// Run only these check ids.
        #[arg(long = "check")]
        checks: Vec<String>,
    },
}

#[derive(Debug, Args)]
pub struct PhysicsArgs {
    /// Monopole number, integer or half-integer ("1/2", "0.5", "-3/2").
    #[arg(long, allow_hyphen_values = true)]
    pub s: HalfInteger,
    /// Coulomb coupling γ.
    #[arg(long = "gamma", default_value_t = 1.0)]
    pub gamma_c: f64,
    #[arg(long, default_value_t = 1.0)]
    pub hbar: f64,
    #[arg(long, default_value_t = 1.0)]
    pub mu: f64,
    /// Particle charge magnitude |e|.
    #[arg(long, default_value_t = 1.0)]
    pub charge: f64,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, global = true, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    Spherical,
    Parabolic,
}
