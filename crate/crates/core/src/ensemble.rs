//! Seeded random-matrix ensembles.
//!
//! Entries are drawn from ChaCha8 streams through Box–Muller (see
//! [`crate::rng`]), so a `(spec, seed)` pair always yields the same matrix.
//! The structured ensembles are built constructively so that the identity
//! they are meant to exhibit holds up to rounding:
//!
//! * `square_zero`: `S = x y*` with `y ⟂ x`, scaled to `‖S‖₂ = scale`.
//! * `trace_nilpotent`: `S = G + cI` with `c` a root of `tr((G + cI)²) = 0`.
//! * `normal_aligned_squares`: `U·diag(λ)·U*` with Haar `U` and every
//!   nonzero `λ_k = ±r_k e^{iφ/2}`, so all nonzero `λ_k²` share argument `φ`.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{householder_qr, Matrix, C64, ONE, ZERO};
use crate::rng::{self, complex_normal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EnsembleKind {
    Ginibre,
    Hermitian,
    Psd,
    Unitary,
    SquareZero,
    TraceNilpotent,
    NormalAlignedSquares,
}

impl EnsembleKind {
    pub const ALL: [EnsembleKind; 7] = [
        EnsembleKind::Ginibre,
        EnsembleKind::Hermitian,
        EnsembleKind::Psd,
        EnsembleKind::Unitary,
        EnsembleKind::SquareZero,
        EnsembleKind::TraceNilpotent,
        EnsembleKind::NormalAlignedSquares,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EnsembleKind::Ginibre => "ginibre",
            EnsembleKind::Hermitian => "hermitian",
            EnsembleKind::Psd => "psd",
            EnsembleKind::Unitary => "unitary",
            EnsembleKind::SquareZero => "square_zero",
            EnsembleKind::TraceNilpotent => "trace_nilpotent",
            EnsembleKind::NormalAlignedSquares => "normal_aligned_squares",
        }
    }
}

impl fmt::Display for EnsembleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EnsembleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EnsembleKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown ensemble `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnsembleSpec {
    pub kind: EnsembleKind,
    pub dim: usize,
    /// Entry scale for ginibre/hermitian/psd, target ‖·‖₂ for square_zero and
    /// trace_nilpotent, eigenvalue-modulus scale for normal_aligned_squares.
    /// Ignored for unitary.
    pub scale: f64,
}

impl EnsembleSpec {
    pub fn new(kind: EnsembleKind, dim: usize) -> Self {
        EnsembleSpec { kind, dim, scale: 1.0 }
    }

    pub fn with_scale(self, scale: f64) -> Self {
        EnsembleSpec { scale, ..self }
    }

    fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::BadDimension(0));
        }
        if !(self.scale > 0.0 && self.scale.is_finite()) {
            return Err(Error::Parse(format!("ensemble scale must be positive, got {}", self.scale)));
        }
        Ok(())
    }

    /// Draws one matrix from `rng`.
    pub fn sample_from<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Matrix> {
        self.validate()?;
        let (n, s) = (self.dim, self.scale);
        let m = match self.kind {
            EnsembleKind::Ginibre => ginibre(n, rng).scale_real(s),
            EnsembleKind::Hermitian => ginibre(n, rng).hermitian_part()?.scale_real(s),
            EnsembleKind::Psd => {
                let g = ginibre(n, rng);
                (&g.adjoint() * &g).scale_real(s / n as f64)
            }
            EnsembleKind::Unitary => haar_unitary(n, rng),
            EnsembleKind::SquareZero => square_zero(n, rng).scale_real(s),
            EnsembleKind::TraceNilpotent => trace_nilpotent(n, rng).scale_real(s),
            EnsembleKind::NormalAlignedSquares => normal_aligned_squares(n, s, rng).matrix,
        };
        Ok(m)
    }
}

/// Deterministic draw for `(spec, seed)`.
pub fn sample(spec: &EnsembleSpec, seed: u64) -> Result<Matrix> {
    spec.sample_from(&mut rng::seeded(seed))
}

pub fn ginibre<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Matrix {
    Matrix::from_fn(n, n, |_, _| complex_normal(rng))
}

/// Gaussian vector normalised to unit length.
pub fn unit_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<C64> {
    loop {
        let v: Vec<C64> = (0..n).map(|_| complex_normal(rng)).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 0.0 {
            return v.into_iter().map(|z| z / norm).collect();
        }
    }
}

/// Haar unitary from the phase-corrected QR of a Ginibre sample.
pub fn haar_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Matrix {
    let (q, r) = householder_qr(&ginibre(n, rng));
    let phases: Vec<C64> = (0..n)
        .map(|k| {
            let d = r.get(k, k);
            if d == ZERO { ONE } else { d / d.norm() }
        })
        .collect();
    Matrix::from_fn(n, n, |i, j| q.get(i, j) * phases[j])
}

/// Rank-one `x y*` with `y ⟂ x`, normalised to unit Hilbert–Schmidt norm.
/// For `n = 1` the only square-zero matrix is zero.
pub fn square_zero<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Matrix {
    if n == 1 {
        return Matrix::zeros(1);
    }
    let x: Vec<C64> = (0..n).map(|_| complex_normal(rng)).collect();
    let y = orthogonal_to(&x, (0..n).map(|_| complex_normal(rng)).collect());
    let s = Matrix::outer(&x, &y);
    let norm = s.hs_norm();
    if norm == 0.0 { s } else { s.scale_real(1.0 / norm) }
}

/// `G + cI` with `tr((G + cI)²) = 0`, normalised to unit Hilbert–Schmidt norm.
pub fn trace_nilpotent<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Matrix {
    let g = ginibre(n, rng);
    let t1 = g.trace().expect("square");
    let t2 = (&g * &g).trace().expect("square");
    let nf = n as f64;
    // n c² + 2 t1 c + t2 = 0; take the smaller root.
    let disc = (t1 * t1 - t2 * nf).sqrt();
    let (c1, c2) = ((-t1 + disc) / nf, (-t1 - disc) / nf);
    let c = if c1.norm() <= c2.norm() { c1 } else { c2 };
    let s = Matrix::from_fn(n, n, |i, j| if i == j { g.get(i, j) + c } else { g.get(i, j) });
    let norm = s.hs_norm();
    if norm == 0.0 { s } else { s.scale_real(1.0 / norm) }
}

/// A normal matrix together with the spectral data it was built from.
#[derive(Debug, Clone)]
pub struct NormalSample {
    pub matrix: Matrix,
    pub eigenvalues: Vec<C64>,
    /// Unitary whose columns are the eigenvectors.
    pub eigenvectors: Matrix,
    /// Common argument of every nonzero `λ_k²`.
    pub square_argument: f64,
}

pub fn normal_aligned_squares<R: Rng + ?Sized>(n: usize, scale: f64, rng: &mut R) -> NormalSample {
    let phi = std::f64::consts::TAU * rng::uniform(rng);
    let half = C64::from_polar(1.0, phi / 2.0);
    let mut eigenvalues: Vec<C64> = (0..n)
        .map(|_| {
            let r = complex_normal(rng).norm() * scale;
            let keep = rng::uniform(rng) >= 0.2;
            let sign = if rng::uniform(rng) < 0.5 { -1.0 } else { 1.0 };
            if keep { half * (sign * r) } else { ZERO }
        })
        .collect();
    if eigenvalues.iter().all(|&z| z == ZERO) {
        eigenvalues[0] = half * scale;
    }
    let u = haar_unitary(n, rng);
    let d = Matrix::diag(&eigenvalues);
    let matrix = &(&u * &d) * &u.adjoint();
    NormalSample { matrix, eigenvalues, eigenvectors: u, square_argument: phi }
}

/// Pair `(B, C) = (x y*, u v*)` with `y ⟂ u`, hence `tr(BC) = (y*u)(v*x) = 0`.
pub fn trace_orthogonal_pair<R: Rng + ?Sized>(n: usize, rng: &mut R) -> (Matrix, Matrix) {
    let mut draw = || -> Vec<C64> { (0..n).map(|_| complex_normal(rng)).collect() };
    let (x, y, u, v) = (draw(), draw(), draw(), draw());
    let u = orthogonal_to(&y, u);
    (Matrix::outer(&x, &y), Matrix::outer(&u, &v))
}

/// Removes the component of `v` along `x`.
fn orthogonal_to(x: &[C64], mut v: Vec<C64>) -> Vec<C64> {
    let xx: f64 = x.iter().map(|z| z.norm_sqr()).sum();
    if xx == 0.0 {
        return v;
    }
    // Two passes of Gram–Schmidt keep ⟨x, v⟩ at rounding level.
    for _ in 0..2 {
        let proj: C64 = x.iter().zip(&v).map(|(a, b)| a.conj() * b).sum::<C64>() / xx;
        for (vi, xi) in v.iter_mut().zip(x) {
            *vi -= proj * xi;
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        for kind in EnsembleKind::ALL {
            let spec = EnsembleSpec::new(kind, 4);
            assert_eq!(sample(&spec, 5).unwrap(), sample(&spec, 5).unwrap(), "{kind}");
            assert_ne!(sample(&spec, 5).unwrap(), sample(&spec, 6).unwrap(), "{kind}");
        }
    }

    #[test]
    fn rejects_zero_dimension_and_bad_scale() {
        let spec = EnsembleSpec::new(EnsembleKind::Ginibre, 0);
        assert_eq!(sample(&spec, 1), Err(Error::BadDimension(0)));
        let spec = EnsembleSpec::new(EnsembleKind::Ginibre, 2).with_scale(-1.0);
        assert!(sample(&spec, 1).is_err());
    }

    #[test]
    fn square_zero_squares_to_zero() {
        for seed in 0..20 {
            let n = 1 + seed as usize % 8;
            let s = sample(&EnsembleSpec::new(EnsembleKind::SquareZero, n), seed).unwrap();
            assert!((&s * &s).hs_norm() <= 1e-12 * s.hs_norm_sqr().max(f64::MIN_POSITIVE));
            if n > 1 {
                assert!((s.hs_norm() - 1.0).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn trace_nilpotent_has_traceless_square() {
        for seed in 0..40 {
            let n = 1 + seed as usize % 8;
            let s = sample(&EnsembleSpec::new(EnsembleKind::TraceNilpotent, n), seed).unwrap();
            let t = (&s * &s).trace().unwrap();
            assert!(t.norm() <= 1e-12 * s.hs_norm_sqr().max(1e-300), "n={n}: {t}");
        }
    }

    #[test]
    fn unitary_is_unitary() {
        for seed in 0..10 {
            let u = sample(&EnsembleSpec::new(EnsembleKind::Unitary, 4), seed).unwrap();
            assert!((&(&u.adjoint() * &u) - &Matrix::identity(4)).hs_norm() <= 1e-10);
        }
    }

    #[test]
    fn hermitian_and_psd_structure() {
        let h = sample(&EnsembleSpec::new(EnsembleKind::Hermitian, 5), 1).unwrap();
        assert_eq!(h.hermitian_defect().unwrap(), 0.0);
        let p = sample(&EnsembleSpec::new(EnsembleKind::Psd, 5), 1).unwrap();
        let eig = crate::matrix::hermitian_eigenvalues(&p).unwrap();
        assert!(eig.iter().all(|&l| l >= -1e-12));
    }

    #[test]
    fn normal_aligned_squares_matches_stored_spectrum() {
        for seed in 0..20 {
            let mut rng = rng::seeded(seed);
            let ns = normal_aligned_squares(5, 1.0, &mut rng);
            let a = &ns.matrix;
            assert!(a.normality_defect().unwrap() <= 1e-10);
            // Each stored (λ_k, u_k) is an eigenpair of the assembled matrix.
            for (k, &lambda) in ns.eigenvalues.iter().enumerate() {
                let u: Vec<C64> = (0..5).map(|i| ns.eigenvectors.get(i, k)).collect();
                let au = a.apply(&u);
                let resid: f64 = au.iter().zip(&u).map(|(x, y)| (x - lambda * y).norm_sqr()).sum();
                assert!(resid.sqrt() <= 1e-12 * a.hs_norm().max(1.0));
            }
            let phi = ns.square_argument;
            for &lambda in ns.eigenvalues.iter().filter(|z| z.norm() > 0.0) {
                let arg = (lambda * lambda).arg();
                let d = (arg - phi).rem_euclid(std::f64::consts::TAU);
                let d = d.min(std::f64::consts::TAU - d);
                assert!(d <= 1e-9, "seed {seed}: {arg} vs {phi}");
            }
        }
    }

    #[test]
    fn trace_orthogonal_pair_is_trace_orthogonal() {
        for seed in 0..20 {
            let mut rng = rng::seeded(seed);
            let (b, c) = trace_orthogonal_pair(4, &mut rng);
            let t = (&b * &c).trace().unwrap();
            assert!(t.norm() <= 1e-12 * b.hs_norm() * c.hs_norm());
        }
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in EnsembleKind::ALL {
            assert_eq!(kind.name().parse::<EnsembleKind>().unwrap(), kind);
        }
        assert!("nope".parse::<EnsembleKind>().is_err());
    }
}
