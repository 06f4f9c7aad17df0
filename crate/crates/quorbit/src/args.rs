use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quorbit_core::SampleMode;

#[derive(Parser, Debug)]
#[command(name = "quorbit", version, about = "Qudit state-space and orbit-space tools")]
pub struct Cli {
    /// Emit CSV instead of JSON.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generalized Gell-Mann basis of su(N).
    Basis(DimArg),
    /// Nonzero structure constants d and f (1-based indices).
    Tensors(DimArg),
    /// Decide whether inputs are density matrices. Reads JSON lines from stdin
    /// when neither --xi nor --spectrum is given.
    Check(CheckArgs),
    /// Trace invariants, characteristic coefficients, discriminant and Casimirs.
    Invariants(StateArgs),
    /// Spectrum to (r, angles), or back with --inverse.
    Param(ParamArgs),
    /// Degeneracy stratum, rank and nested radius of an orbit point.
    Boundary(OrbitArgs),
    /// Seeded random states as JSON lines.
    Sample(SampleArgs),
    /// Data series for plotting.
    Figure(FigureArgs),
}

#[derive(Args, Debug)]
pub struct DimArg {
    #[arg(long = "N", value_name = "N")]
    pub n: usize,
}

#[derive(Args, Debug)]
pub struct StateArgs {
    /// Expected dimension; inferred from the input when omitted.
    #[arg(long = "N", value_name = "N")]
    pub n: Option<usize>,
    /// Bloch vector, comma separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, conflicts_with = "spectrum")]
    pub xi: Option<Vec<f64>>,
    /// Eigenvalues of a diagonal state, comma separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub spectrum: Option<Vec<f64>>,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[command(flatten)]
    pub state: StateArgs,
    /// Slack allowed below zero in the positivity tests.
    #[arg(long, default_value_t = quorbit_core::state_space::STATE_TOL)]
    pub tol: f64,
}

#[derive(Args, Debug)]
pub struct OrbitArgs {
    #[arg(long = "N", value_name = "N")]
    pub n: Option<usize>,
    /// Bloch radius.
    #[arg(long)]
    pub r: Option<f64>,
    /// N − 2 sphere angles, comma separated; the last one is φ.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub angles: Option<Vec<f64>>,
    /// Spectrum to convert to (r, angles) first.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, conflicts_with_all = ["r", "angles"])]
    pub spectrum: Option<Vec<f64>>,
}

#[derive(Args, Debug)]
pub struct ParamArgs {
    #[command(flatten)]
    pub orbit: OrbitArgs,
    /// Map (r, angles) to a spectrum.
    #[arg(long)]
    pub inverse: bool,
}

#[derive(Args, Debug)]
pub struct SampleArgs {
    #[arg(long = "N", value_name = "N")]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[arg(long, default_value = "spectrum-haar", value_parser = parse_mode)]
    pub mode: SampleMode,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Emit density matrices instead of Bloch vectors.
    #[arg(long)]
    pub matrix: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FigureName {
    /// Orbit points of random qutrit states in the (I3, I8) plane.
    QutritTriangle,
    /// Arcs of constant r inside the ordered qutrit domain.
    QutritArcs,
    /// The rank-2 qutrit curve r = 1/(2 sin(φ/3)).
    QutritRank2,
    /// Rank-3 quatrit states on the I15 = 1/3 slice.
    QuatritSlice,
    /// Vertices of the ordered quatrit simplex cut by spheres of radius r.
    QuatritPolyhedron,
}

#[derive(Args, Debug)]
pub struct FigureArgs {
    #[arg(long, value_enum)]
    pub name: FigureName,
    /// Random points, or points per curve.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Radii for arcs and polyhedra, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub r: Option<Vec<f64>>,
}

fn parse_mode(s: &str) -> Result<SampleMode, String> {
    s.parse().map_err(|e: quorbit_core::Error| e.to_string())
}
