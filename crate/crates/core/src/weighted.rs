//! Weighted real and imaginary parts.
//!
//! For `ν ∈ [0, 1]`:
//!
//! * `𝔯_ν(A) = νA + (1−ν)A*`
//! * `𝔦_ν(A) = ν(−iA) + (1−ν)(−iA)* = −iνA + i(1−ν)A*`
//!
//! so that `𝔯_ν(A) + i𝔦_ν(A) = 2νA` and `𝔯_ν(A) − i𝔦_ν(A) = 2(1−ν)A*`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{Matrix, C64, I};

/// A weight `ν ∈ [0, 1]`. Construction is the only place the range is checked.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Weight(f64);

impl Weight {
    pub const ZERO: Weight = Weight(0.0);
    pub const HALF: Weight = Weight(0.5);
    pub const ONE: Weight = Weight(1.0);

    pub fn new(nu: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&nu) {
            Ok(Weight(nu))
        } else {
            Err(Error::WeightOutOfRange(nu))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// `1 − ν`.
    pub fn complement(self) -> Weight {
        Weight(1.0 - self.0)
    }

    /// `2ν² − 2ν + 1`, the coefficient of `‖A‖₂²` in the Hilbert–Schmidt radius.
    pub fn hs_coefficient(self) -> f64 {
        let nu = self.0;
        2.0 * nu * nu - 2.0 * nu + 1.0
    }

    /// `2ν(1 − ν)`, the coefficient of `|tr(A²)|`.
    pub fn cross_coefficient(self) -> f64 {
        2.0 * self.0 * (1.0 - self.0)
    }
}

impl TryFrom<f64> for Weight {
    type Error = Error;
    fn try_from(nu: f64) -> Result<Self> {
        Weight::new(nu)
    }
}

impl From<Weight> for f64 {
    fn from(w: Weight) -> f64 {
        w.0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `𝔯_ν(A) = νA + (1−ν)A*`.
pub fn weighted_real(a: &Matrix, nu: Weight) -> Result<Matrix> {
    a.require_square()?;
    let v = nu.value();
    a.lin_comb(C64::new(v, 0.0), &a.adjoint(), C64::new(1.0 - v, 0.0))
}

/// `𝔦_ν(A) = −iνA + i(1−ν)A*`.
pub fn weighted_imag(a: &Matrix, nu: Weight) -> Result<Matrix> {
    a.require_square()?;
    let v = nu.value();
    a.lin_comb(-I * v, &a.adjoint(), I * (1.0 - v))
}

/// `e^{iθ}A`.
pub fn rotate(a: &Matrix, theta: f64) -> Matrix {
    a.scale(C64::from_polar(1.0, theta))
}

/// Inverts `X ↦ (𝔯_ν(X), 𝔯_ν(iX))` via `X = (R0 − i·R1)/(2ν)`.
pub fn reconstruct(r0: &Matrix, r1: &Matrix, nu: Weight) -> Result<Matrix> {
    r0.require_square()?;
    r1.require_square()?;
    if nu.value() == 0.0 {
        return Err(Error::ZeroWeight);
    }
    let k = 1.0 / (2.0 * nu.value());
    r0.lin_comb(C64::new(k, 0.0), r1, -I * k)
}

/// `𝔯_ν(e^{iθ}A) = νe^{iθ}A + (1−ν)e^{−iθ}A*` with `A*` supplied by the caller.
pub(crate) fn rotated_weighted_real(a: &Matrix, a_star: &Matrix, nu: f64, theta: f64) -> Matrix {
    let e = C64::from_polar(1.0, theta);
    a.lin_comb(e * nu, a_star, e.conj() * (1.0 - nu)).expect("A and A* share a shape")
}
