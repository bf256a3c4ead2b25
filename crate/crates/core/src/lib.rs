//! Weighted numerical radius `w_(N,ν)` of dense complex matrices.
//!
//! * [`matrix`]: dense complex matrices, norms, a Hermitian eigensolver.
//! * [`ensemble`]: seeded random-matrix ensembles.
//! * [`weighted`]: the weighted real and imaginary parts `𝔯_ν`, `𝔦_ν`.
//! * [`radius`]: closed-form and swept radii.
//! * [`blocks`]: 2×2 block matrices.

pub mod blocks;
pub mod cli;
pub mod ensemble;
pub mod error;
pub mod exec;
pub mod harness;
pub mod matrix;
pub mod radius;
pub mod rng;
pub mod weighted;

pub use error::{Error, Result};
pub use exec::Execution;
pub use matrix::{Matrix, C64};
pub use radius::{NormKind, RadiusResult, SweepConfig};
pub use weighted::Weight;
