//! The weighted numerical radius
//! `w_(N,ν)(A) = sup_θ N(𝔯_ν(e^{iθ}A))`.
//!
//! For the Hilbert–Schmidt norm the θ-profile is explicit,
//!
//! ```text
//! ‖𝔯_ν(e^{iθ}A)‖₂² = (2ν²−2ν+1)‖A‖₂² + 2ν(1−ν)·Re(e^{2iθ} tr(A²)),
//! ```
//!
//! and its supremum has the closed form [`w2nu_closed`]. Any other norm goes
//! through [`radius_sweep`], a grid search over `θ ∈ [0, π)` (the profile is
//! π-periodic because `𝔯_ν(e^{i(θ+π)}A) = −𝔯_ν(e^{iθ}A)`) followed by a
//! golden-section polish. Sweep results carry a rigorous `error_bound`: the
//! true supremum lies in `[value, value + error_bound]`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::{map_indexed, Execution};
use crate::matrix::{hermitian_eigenvalues, operator_norm, Matrix, C64, I};
use crate::weighted::{rotated_weighted_real, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormKind {
    HilbertSchmidt,
    Operator,
}

impl NormKind {
    pub fn eval(self, m: &Matrix) -> Result<f64> {
        match self {
            NormKind::HilbertSchmidt => Ok(m.hs_norm()),
            NormKind::Operator => operator_norm(m),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiusResult {
    pub value: f64,
    /// A maximising angle in `[0, π)`.
    pub theta_star: f64,
    /// Zero for closed forms.
    pub error_bound: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub grid_points: usize,
    pub refine: bool,
    pub refine_tol: f64,
    #[serde(skip)]
    pub execution: Execution,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { grid_points: 2048, refine: true, refine_tol: 1e-12, execution: Execution::default() }
    }
}

impl SweepConfig {
    pub fn with_grid(self, grid_points: usize) -> Self {
        SweepConfig { grid_points, ..self }
    }

    pub fn with_execution(self, execution: Execution) -> Self {
        SweepConfig { execution, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.grid_points < 8 {
            return Err(Error::BadSweepConfig(format!("grid_points must be >= 8, got {}", self.grid_points)));
        }
        if self.refine_tol.is_nan() || self.refine_tol <= 0.0 {
            return Err(Error::BadSweepConfig(format!("refine_tol must be positive, got {}", self.refine_tol)));
        }
        Ok(())
    }
}

/// `‖𝔯_ν(e^{iθ}A)‖₂` from the explicit profile formula.
pub fn hs_theta_profile(a: &Matrix, nu: Weight, theta: f64) -> Result<f64> {
    a.require_square()?;
    let t2 = (a * a).trace()?;
    let phase = C64::from_polar(1.0, 2.0 * theta);
    let sq = nu.hs_coefficient() * a.hs_norm_sqr() + nu.cross_coefficient() * (phase * t2).re;
    Ok(sq.max(0.0).sqrt())
}

/// Closed-form Hilbert–Schmidt radius
/// `w_(2,ν)(A)² = (2ν²−2ν+1)‖A‖₂² + 2ν(1−ν)|tr(A²)|`.
pub fn w2nu_closed(a: &Matrix, nu: Weight) -> Result<RadiusResult> {
    a.require_square()?;
    let t2 = (a * a).trace()?;
    let sq = nu.hs_coefficient() * a.hs_norm_sqr() + nu.cross_coefficient() * t2.norm();
    Ok(RadiusResult { value: sq.sqrt(), theta_star: maximizer_from_trace(t2, nu), error_bound: 0.0 })
}

/// Angle in `[0, π)` where the Hilbert–Schmidt profile peaks: `−arg(tr A²)/2 mod π`.
/// Returns 0 when the profile is flat (`tr(A²) = 0` or `ν ∈ {0, 1}`).
pub fn w2nu_maximizer(a: &Matrix, nu: Weight) -> Result<f64> {
    a.require_square()?;
    Ok(maximizer_from_trace((a * a).trace()?, nu))
}

fn maximizer_from_trace(t2: C64, nu: Weight) -> f64 {
    if t2.norm() == 0.0 || nu.cross_coefficient() == 0.0 {
        return 0.0;
    }
    wrap_half_turn(-t2.arg() / 2.0)
}

fn wrap_half_turn(theta: f64) -> f64 {
    let t = theta.rem_euclid(PI);
    if t >= PI { 0.0 } else { t }
}

/// `sup_θ N(𝔯_ν(e^{iθ}A))` by grid search plus golden-section refinement.
///
/// The reported `error_bound` is `L·π/grid_points` with
/// `L = ν·N(A) + (1−ν)·N(A*)`, a Lipschitz constant of `θ ↦ N(𝔯_ν(e^{iθ}A))`.
pub fn radius_sweep(a: &Matrix, nu: Weight, norm: NormKind, cfg: &SweepConfig) -> Result<RadiusResult> {
    a.require_square()?;
    cfg.validate()?;
    let a_star = a.adjoint();
    let v = nu.value();
    let lipschitz = v * norm.eval(a)? + (1.0 - v) * norm.eval(&a_star)?;
    let profile = |theta: f64| norm.eval(&rotated_weighted_real(a, &a_star, v, theta));
    Ok(sweep_profile(profile, lipschitz, cfg)?.result)
}

/// Weighted numerical radius `w_ν(A)` (operator norm).
pub fn wnu_operator(a: &Matrix, nu: Weight, cfg: &SweepConfig) -> Result<RadiusResult> {
    radius_sweep(a, nu, NormKind::Operator, cfg)
}

/// Classical numerical radius `w(A) = sup_θ ‖𝔯(e^{iθ}A)‖`, evaluating each
/// gridpoint as the spectral radius of the Hermitian matrix `𝔯(e^{iθ}A)`.
///
/// Besides the Lipschitz bound, the grid also gives the support-function
/// bound: the numerical range lies inside the polygon cut out by the `2m`
/// supporting lines at spacing `h = π/m`, so `w(A) ≤ grid_max / cos(h/2)`.
/// The smaller of the two is reported.
pub fn classical_w(a: &Matrix, cfg: &SweepConfig) -> Result<RadiusResult> {
    a.require_square()?;
    cfg.validate()?;
    let a_star = a.adjoint();
    let lipschitz = operator_norm(a)?;
    let profile = |theta: f64| {
        let re = rotated_weighted_real(a, &a_star, 0.5, theta);
        let eig = hermitian_eigenvalues(&re)?;
        Ok(eig[0].abs().max(eig[eig.len() - 1].abs()))
    };
    let sweep = sweep_profile(profile, lipschitz, cfg)?;
    let h = PI / cfg.grid_points as f64;
    let polygon = (sweep.grid_max / (h / 2.0).cos() - sweep.result.value).max(0.0);
    let mut result = sweep.result;
    result.error_bound = result.error_bound.min(polygon);
    Ok(result)
}

/// `½·max N(𝔯_ν((e^{iθ} − ie^{iφ})A))` over a `grid_points × grid_points` grid
/// on `[0, 2π)²`. A lower bound on `w_(N,ν)(A)`; see [`two_angle_error_bound`].
pub fn two_angle_radius(a: &Matrix, nu: Weight, norm: NormKind, grid_points: usize) -> Result<f64> {
    a.require_square()?;
    if grid_points == 0 {
        return Err(Error::BadSweepConfig("grid_points must be positive".into()));
    }
    let a_star = a.adjoint();
    let v = nu.value();
    let h = 2.0 * PI / grid_points as f64;
    let mut best = 0.0f64;
    for j in 0..grid_points {
        let e_theta = C64::from_polar(1.0, j as f64 * h);
        for k in 0..grid_points {
            let c = e_theta - I * C64::from_polar(1.0, k as f64 * h);
            let m = a.lin_comb(c * v, &a_star, c.conj() * (1.0 - v))?;
            best = best.max(0.5 * norm.eval(&m)?);
        }
    }
    Ok(best)
}

/// Gap bound for [`two_angle_radius`]: both partial derivatives are at most
/// `L/2`, and the maximiser is within `h/2` of a gridpoint in each angle, so
/// the grid misses the supremum by at most `L·h/2` with `h = 2π/grid_points`.
pub fn two_angle_error_bound(a: &Matrix, nu: Weight, norm: NormKind, grid_points: usize) -> Result<f64> {
    let v = nu.value();
    let lipschitz = v * norm.eval(a)? + (1.0 - v) * norm.eval(&a.adjoint())?;
    Ok(lipschitz * PI / grid_points as f64)
}

/// `(θ_k, N(𝔯_ν(e^{iθ_k}A)))` on `θ_k = kπ/points`, `k = 0..points`.
pub fn theta_profile(
    a: &Matrix,
    nu: Weight,
    norm: NormKind,
    points: usize,
    execution: Execution,
) -> Result<Vec<(f64, f64)>> {
    a.require_square()?;
    let a_star = a.adjoint();
    let h = PI / points as f64;
    map_indexed(execution, points, |k| {
        let theta = k as f64 * h;
        norm.eval(&rotated_weighted_real(a, &a_star, nu.value(), theta)).map(|g| (theta, g))
    })
    .into_iter()
    .collect()
}

/// Result of [`sweep_profile`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepOutcome {
    pub result: RadiusResult,
    /// Maximum over the uniform grid alone, before refinement.
    pub grid_max: f64,
}

/// Supremum of a π-periodic profile `g` with Lipschitz constant `lipschitz`.
///
/// The grid maximum is exact over all `grid_points` nodes but not every node
/// is evaluated: the grid is filled in by bisection from a coarse level, and
/// a bracket `[i, j]` is skipped when `(g_i + g_j)/2 + L·(j−i)·h/2` is below
/// the best value seen so far. Every level is evaluated as one batch, so the
/// set of evaluated nodes does not depend on `cfg.execution`.
pub fn sweep_profile<F>(g: F, lipschitz: f64, cfg: &SweepConfig) -> Result<SweepOutcome>
where
    F: Fn(f64) -> Result<f64> + Sync + Send,
{
    cfg.validate()?;
    let m = cfg.grid_points;
    let h = PI / m as f64;
    let node = |k: usize| k as f64 * h;
    let eval_batch = |idx: &[usize]| -> Result<Vec<f64>> {
        map_indexed(cfg.execution, idx.len(), |i| g(node(idx[i]))).into_iter().collect()
    };

    let mut values: Vec<Option<f64>> = vec![None; m];
    let stride = (m / 64).max(1);
    let coarse: Vec<usize> = (0..m).step_by(stride).collect();
    for (&k, v) in coarse.iter().zip(eval_batch(&coarse)?) {
        values[k] = Some(v);
    }

    // Bracket (lo, hi) with hi possibly equal to m, which aliases node 0.
    let mut brackets: Vec<(usize, usize)> =
        coarse.windows(2).map(|w| (w[0], w[1])).chain(std::iter::once((*coarse.last().unwrap(), m))).collect();
    let value_at = |values: &[Option<f64>], k: usize| values[k % m].expect("bracket endpoints are evaluated");

    loop {
        let best = best_node(&values).1;
        let mut next = Vec::new();
        let mut mids = Vec::new();
        for &(lo, hi) in &brackets {
            if hi - lo < 2 {
                continue;
            }
            let bound = 0.5 * (value_at(&values, lo) + value_at(&values, hi)) + 0.5 * lipschitz * (hi - lo) as f64 * h;
            if bound < best {
                continue;
            }
            let mid = (lo + hi) / 2;
            mids.push(mid);
            next.push((lo, mid));
            next.push((mid, hi));
        }
        if mids.is_empty() {
            break;
        }
        for (&k, v) in mids.iter().zip(eval_batch(&mids)?) {
            values[k] = Some(v);
        }
        brackets = next;
    }

    let (k_best, grid_max) = best_node(&values);
    let mut theta_star = node(k_best);
    let mut value = grid_max;

    if cfg.refine && lipschitz > 0.0 {
        let (mut lo, mut hi) = (theta_star - h, theta_star + h);
        let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
        let mut c = hi - inv_phi * (hi - lo);
        let mut d = lo + inv_phi * (hi - lo);
        let (mut gc, mut gd) = (g(c)?, g(d)?);
        let mut consider = |theta: f64, v: f64| {
            if v > value {
                value = v;
                theta_star = theta;
            }
        };
        consider(c, gc);
        consider(d, gd);
        while hi - lo > cfg.refine_tol {
            if gc >= gd {
                hi = d;
                d = c;
                gd = gc;
                c = hi - inv_phi * (hi - lo);
                gc = g(c)?;
                consider(c, gc);
            } else {
                lo = c;
                c = d;
                gc = gd;
                d = lo + inv_phi * (hi - lo);
                gd = g(d)?;
                consider(d, gd);
            }
        }
    }

    Ok(SweepOutcome {
        result: RadiusResult { value, theta_star: wrap_half_turn(theta_star), error_bound: lipschitz * h },
        grid_max,
    })
}

/// Largest evaluated node; ties go to the smallest index.
fn best_node(values: &[Option<f64>]) -> (usize, f64) {
    let mut best = (0, f64::NEG_INFINITY);
    for (k, v) in values.iter().enumerate() {
        if let Some(v) = *v {
            if v > best.1 {
                best = (k, v);
            }
        }
    }
    best
}
