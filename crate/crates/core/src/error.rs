use thiserror::Error;

/// Errors raised by the matrix, radius, block and harness layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    #[error("matrix is not Hermitian (asymmetry {asymmetry:e})")]
    NotHermitian { asymmetry: f64 },

    #[error("{what} did not converge after {iterations} iterations")]
    ConvergenceFailure { what: &'static str, iterations: usize },

    #[error("invalid dimension {0}")]
    BadDimension(usize),

    #[error("weight must be positive for reconstruction")]
    ZeroWeight,

    #[error("weight {0} outside [0, 1]")]
    WeightOutOfRange(f64),

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("negative radicand {0:e} beyond clamp tolerance")]
    NegativeRadicand(f64),

    #[error("unknown property id `{0}`")]
    UnknownProperty(String),

    #[error("invalid sweep configuration: {0}")]
    BadSweepConfig(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
