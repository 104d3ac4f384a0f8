//! `fiberspec`: forward dispersion tables, permittivity reconstructions,
//! noise sweeps, functional landscapes and radius calibration, driven by a
//! JSON experiment file.

pub mod config;
mod commands;
mod output;
mod svg;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use fiberspec_core::inverse::InverseError;
use fiberspec_core::waveguide::WaveguideError;
use thiserror::Error;

pub use config::ExperimentConfig;
pub use output::VERSION;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Io(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }
}

impl From<WaveguideError> for CliError {
    fn from(e: WaveguideError) -> Self {
        match e {
            WaveguideError::SpecFun(_) | WaveguideError::NotSurfaceMode { .. } => CliError::Numerical(e.to_string()),
            _ => CliError::Config(e.to_string()),
        }
    }
}

impl From<InverseError> for CliError {
    fn from(e: InverseError) -> Self {
        match e {
            InverseError::Waveguide(w) => w.into(),
            other => CliError::Config(other.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "fiberspec", version = VERSION, about = "Layered fiber eigenwaves: forward solves and permittivity reconstruction")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, clap::Args)]
struct Common {
    /// JSON experiment file (schema_version 1).
    #[arg(long)]
    config: PathBuf,
    /// Output directory, created if missing.
    #[arg(long)]
    out: PathBuf,
    /// Overrides the seed in the config file.
    #[arg(long)]
    seed: Option<u64>,
    /// Suppress progress messages.
    #[arg(long)]
    quiet: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fundamental-mode propagation constants for the true profile.
    Forward(Common),
    /// Reconstruct permittivities from (noisy) measurements.
    Reconstruct(Common),
    /// Evaluate the Tikhonov functional on an (ε₁, ε_e) grid.
    Landscape(Common),
    /// Repeat reconstructions over noise levels and trials.
    NoiseSweep(Common),
    /// Fit the core radius to one measured pair.
    CalibrateRadius(Common),
}

pub struct Context {
    pub out: PathBuf,
    pub quiet: bool,
}

impl Context {
    fn progress(&self, msg: &str) {
        if !self.quiet {
            eprintln!("fiberspec: {msg}");
        }
    }

    fn warn(&self, msg: &str) {
        eprintln!("fiberspec: warning: {msg}");
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code. Diagnostics go to standard error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let (common, cmd): (&Common, fn(&ExperimentConfig, &Context) -> Result<(), CliError>) = match &cli.command {
        Command::Forward(c) => (c, commands::forward),
        Command::Reconstruct(c) => (c, commands::reconstruct),
        Command::Landscape(c) => (c, commands::landscape),
        Command::NoiseSweep(c) => (c, commands::noise_sweep),
        Command::CalibrateRadius(c) => (c, commands::calibrate),
    };
    let result = ExperimentConfig::load(&common.config).and_then(|mut cfg| {
        if common.seed.is_some() {
            cfg.seed = common.seed;
        }
        cmd(&cfg, &Context { out: common.out.clone(), quiet: common.quiet })
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("fiberspec: {e}");
            e.exit_code()
        }
    }
}
