//! Largest singular value by power iteration on the Gram matrix.
//!
//! The iteration runs on `P = (A*A)^(2^SQUARINGS)` (trace-normalised after
//! every squaring) while convergence is judged on the Rayleigh quotient of
//! `A*A` itself. Squaring shrinks the effective eigenvalue ratio from `q` to
//! `q^65536`, which keeps near-degenerate top singular values (common along a
//! θ-sweep where two branches cross) well inside the iteration cap.
//!
//! Two starts are used: the all-ones vector and one seeded random vector. The
//! larger Rayleigh quotient wins; both are lower bounds on `λ_max(A*A)`.
//! Relative accuracy on well-separated spectra is ~1e-15; the documented
//! contract is 1e-10.

use super::{vec_dot, vec_norm, Matrix, C64};
use crate::error::{Error, Result};
use crate::rng;

const SQUARINGS: usize = 16;
const MAX_ITERATIONS: usize = 20_000;
const RAYLEIGH_TOL: f64 = 1e-13;
const RESTART_SEED: u64 = 0x0D0E_5EED;

/// Largest singular value of `a`, i.e. `√λ_max(A*A)`.
pub fn operator_norm(a: &Matrix) -> Result<f64> {
    let scale = a.hs_norm_sqr();
    if scale == 0.0 {
        return Ok(0.0);
    }
    let n = a.cols();
    // Gram matrix normalised to unit trace, so its spectrum lies in [0, 1].
    let gram = a.adjoint().matmul(a)?.scale_real(1.0 / scale);
    if n == 1 {
        return Ok(a.hs_norm());
    }

    let mut power = gram.clone();
    for _ in 0..SQUARINGS {
        let sq = &power * &power;
        let t = sq.trace()?.re;
        if t.is_nan() || t <= 0.0 {
            break;
        }
        power = sq.hermitian_part()?.scale_real(1.0 / t);
    }

    let ones = vec![C64::new(1.0, 0.0); n];
    let mut rng = rng::seeded(rng::splitmix64(RESTART_SEED ^ n as u64));
    let random: Vec<C64> = (0..n).map(|_| rng::complex_normal(&mut rng)).collect();

    let rho = iterate(&gram, &power, ones)?.max(iterate(&gram, &power, random)?);
    Ok((rho.max(0.0) * scale).sqrt())
}

fn rayleigh(gram: &Matrix, x: &[C64]) -> f64 {
    vec_dot(x, &gram.apply(x)).re
}

fn iterate(gram: &Matrix, power: &Matrix, start: Vec<C64>) -> Result<f64> {
    let norm = vec_norm(&start);
    if norm == 0.0 {
        return Ok(0.0);
    }
    let mut x: Vec<C64> = start.iter().map(|z| z / norm).collect();
    let mut prev = rayleigh(gram, &x);
    for _ in 0..MAX_ITERATIONS {
        let y = power.apply(&x);
        let ny = vec_norm(&y);
        if ny == 0.0 || !ny.is_finite() {
            // Start vector orthogonal to the dominant subspace.
            return Ok(prev);
        }
        x = y.iter().map(|z| z / ny).collect();
        let rho = rayleigh(gram, &x);
        if (rho - prev).abs() <= RAYLEIGH_TOL * rho.abs() {
            return Ok(rho.max(prev));
        }
        prev = rho;
    }
    Err(Error::ConvergenceFailure { what: "power iteration", iterations: MAX_ITERATIONS })
}
