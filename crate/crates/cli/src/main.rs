//! `fuzzygeom`: fuzzy-surface sweeps, continuum convergence studies and
//! spectral bound tables.

mod bound;
mod common;
mod continuum;
mod fuzzy;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fuzzygeom_core::error::ErrorClass;

#[derive(Parser, Debug)]
#[command(
    name = "fuzzygeom",
    version,
    about = "Discrete curvature of matrix regularizations and their continuum limits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build fuzzy surfaces over a range of N and compute invariants.
    Fuzzy(fuzzy::FuzzyArgs),
    /// Grid-refinement study of the bracket calculus on an embedded manifold.
    Continuum(continuum::ContinuumArgs),
    /// Tabulate the spectral bound λ_min ≥ 2κ over N.
    Bound(bound::BoundArgs),
}

/// Failure carried to the exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Numerical(String),
    Precondition(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Numerical(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Precondition(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Numerical(m) | Failure::Precondition(m) => m,
        }
    }
}

impl From<fuzzygeom_core::Error> for Failure {
    fn from(e: fuzzygeom_core::Error) -> Self {
        let msg = e.to_string();
        match e.class() {
            ErrorClass::Usage => Failure::Usage(msg),
            ErrorClass::Numerical => Failure::Numerical(msg),
            ErrorClass::Precondition => Failure::Precondition(msg),
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Fuzzy(a) => fuzzy::run(a),
        Command::Continuum(a) => continuum::run(a),
        Command::Bound(a) => bound::run(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("fuzzygeom: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
