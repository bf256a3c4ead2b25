//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verified property was violated, 2 bad input.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::ensemble::{sample, EnsembleKind, EnsembleSpec};
use crate::error::Error;
use crate::harness::{run_selected, registry, SuiteConfig};
use crate::matrix::Matrix;
use crate::radius::{radius_sweep, theta_profile, w2nu_closed, NormKind, RadiusResult, SweepConfig};
use crate::weighted::Weight;

#[derive(Debug, Parser)]
#[command(name = "wradius", version, about = "Weighted numerical radius toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NormArg {
    Hs,
    Op,
}

impl From<NormArg> for NormKind {
    fn from(n: NormArg) -> Self {
        match n {
            NormArg::Hs => NormKind::HilbertSchmidt,
            NormArg::Op => NormKind::Operator,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Closed,
    Sweep,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute w_(N,ν)(A) for a matrix file.
    Compute {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        nu: f64,
        #[arg(long, value_enum, default_value = "hs")]
        norm: NormArg,
        #[arg(long, value_enum, default_value = "closed")]
        method: MethodArg,
        #[arg(long, default_value_t = 2048)]
        grid: usize,
    },
    /// Write the θ-profile N(𝔯_ν(e^{iθ}A)) on [0, π) as CSV.
    Sweep {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        nu: f64,
        #[arg(long, value_enum, default_value = "hs")]
        norm: NormArg,
        #[arg(long, default_value_t = 256)]
        points: usize,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the property suite and write a JSON report.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        /// Comma-separated matrix dimensions.
        #[arg(long, value_delimiter = ',')]
        dims: Option<Vec<usize>>,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Comma-separated property ids.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
    },
    /// Sample a matrix from a seeded ensemble.
    Gen {
        #[arg(long)]
        ensemble: String,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Exit status of a successful command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Violation,
}

impl Outcome {
    pub fn code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::Violation => 1,
        }
    }
}

/// Usage or input failure; maps to exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

impl From<std::io::Error> for UsageError {
    fn from(e: std::io::Error) -> Self {
        UsageError(e.to_string())
    }
}

#[derive(Serialize)]
struct ComputeRecord {
    norm: NormKind,
    method: &'static str,
    nu: Weight,
    dim: usize,
    #[serde(flatten)]
    result: RadiusResult,
}

pub fn run(cli: Cli) -> Result<Outcome, UsageError> {
    match cli.command {
        Command::Compute { matrix, nu, norm, method, grid } => {
            let a = read_matrix(&matrix)?;
            let nu = Weight::new(nu)?;
            let norm = NormKind::from(norm);
            let (result, method) = match method {
                MethodArg::Closed => {
                    if norm != NormKind::HilbertSchmidt {
                        return Err(UsageError("--method closed requires --norm hs".into()));
                    }
                    (w2nu_closed(&a, nu)?, "closed")
                }
                MethodArg::Sweep => {
                    let cfg = SweepConfig::default().with_grid(grid);
                    (radius_sweep(&a, nu, norm, &cfg)?, "sweep")
                }
            };
            let record = ComputeRecord { norm, method, nu, dim: a.rows(), result };
            emit(None, &(serde_json::to_string_pretty(&record).expect("record serializes") + "\n"))?;
            Ok(Outcome::Success)
        }
        Command::Sweep { matrix, nu, norm, points, out } => {
            let a = read_matrix(&matrix)?;
            let nu = Weight::new(nu)?;
            if points == 0 {
                return Err(UsageError("--points must be positive".into()));
            }
            let rows = theta_profile(&a, nu, norm.into(), points, Default::default())?;
            let mut csv = String::from("theta,value\n");
            for (theta, value) in rows {
                csv.push_str(&format!("{theta},{value}\n"));
            }
            emit(out.as_deref(), &csv)?;
            Ok(Outcome::Success)
        }
        Command::Verify { seed, trials, dims, out, only } => {
            let mut cfg = SuiteConfig::new(seed).with_trials(trials);
            if let Some(dims) = dims {
                cfg = cfg.with_dims(dims);
            }
            let ids: Vec<String> = match only {
                Some(ids) => ids.into_iter().map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect(),
                None => registry().iter().map(|c| c.id.to_string()).collect(),
            };
            let id_refs: Vec<&str> = ids.iter().map(String::as_str).collect();
            let report = run_selected(&cfg, &id_refs)?;
            emit(out.as_deref(), &report.to_json())?;
            for p in report.properties.iter().filter(|p| !p.passed()) {
                eprintln!("violated: {} ({} of {} trials, worst margin {:e})", p.id, p.violations, p.trials, p.worst_margin);
            }
            Ok(if report.all_passed() { Outcome::Success } else { Outcome::Violation })
        }
        Command::Gen { ensemble, dim, seed, out } => {
            let kind: EnsembleKind = ensemble.parse().map_err(|e: Error| UsageError(e.to_string()))?;
            let m = sample(&EnsembleSpec::new(kind, dim), seed)?;
            emit(out.as_deref(), &(m.to_json() + "\n"))?;
            Ok(Outcome::Success)
        }
    }
}

fn read_matrix(path: &Path) -> Result<Matrix, UsageError> {
    let text = fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    Ok(Matrix::from_json(&text)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), UsageError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| UsageError(format!("{}: {e}", path.display()))),
        None => Ok(std::io::stdout().lock().write_all(text.as_bytes())?),
    }
}
