use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use epr_frames::frames::Realization;
use epr_frames::lab::Estimator;

const DEFAULT_GOLDEN_DIR: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/golden");

#[derive(Debug, Parser)]
#[command(name = "epr-frames", version, about = "Orientation-λ frame identities and correlation experiments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Number of trials.
    #[arg(long, global = true, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,

    /// Seed of the λ stream.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = RealizationArg::Oriented)]
    pub realization: RealizationArg,

    #[arg(long, global = true, value_enum, default_value_t = EstimatorArg::Standardized)]
    pub estimator: EstimatorArg,

    /// Detector angles in the e_x, e_y plane, in radians, comma-separated.
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true, value_parser = finite_f64)]
    pub angles: Vec<f64>,

    /// Explicit detector direction `x,y,z`; repeat once per detector.
    /// Replaces `--angles`.
    #[arg(long = "vector", global = true, allow_hyphen_values = true, value_parser = parse_vector, conflicts_with = "angles")]
    pub vectors: Vec<[f64; 3]>,

    /// Output format; `scan` defaults to csv, everything else to json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Directory holding the committed golden files.
    #[arg(long, global = true, default_value = DEFAULT_GOLDEN_DIR)]
    pub golden: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Emit the identity truth table and compare it with the golden file.
    Check,
    /// Estimate one correlation E(a, b) from two angles.
    Simulate,
    /// Sweep θ_b over [0, π] at fixed θ_a (one optional angle, default 0).
    Scan {
        /// Grid intervals; the step is π / steps.
        #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..))]
        steps: u32,
    },
    /// Estimate the CHSH combination from angles a, a′, b, b′.
    Chsh,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Simulate => "simulate",
            Command::Scan { .. } => "scan",
            Command::Chsh => "chsh",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RealizationArg {
    Concrete,
    Oriented,
}

impl From<RealizationArg> for Realization {
    fn from(r: RealizationArg) -> Self {
        match r {
            RealizationArg::Concrete => Realization::ConcreteEmbedding,
            RealizationArg::Oriented => Realization::OrientedStructure,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EstimatorArg {
    Raw,
    Standardized,
    Onepage,
    Gillgame,
}

impl From<EstimatorArg> for Estimator {
    fn from(e: EstimatorArg) -> Self {
        match e {
            EstimatorArg::Raw => Estimator::Raw,
            EstimatorArg::Standardized => Estimator::Standardized,
            EstimatorArg::Onepage => Estimator::OnePage,
            EstimatorArg::Gillgame => Estimator::GillGame,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

fn finite_f64(s: &str) -> Result<f64, String> {
    let x: f64 = s.trim().parse().map_err(|e| format!("`{s}`: {e}"))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(format!("`{s}` is not a finite number"))
    }
}

fn parse_vector(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<f64> = s.split(',').map(finite_f64).collect::<Result<_, _>>()?;
    parts.try_into().map_err(|p: Vec<f64>| format!("expected three components, got {}", p.len()))
}
