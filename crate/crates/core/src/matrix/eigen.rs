//! Cyclic Jacobi eigenvalues for complex Hermitian matrices.

use super::{Matrix, C64, ZERO};
use crate::error::{Error, Result};

const HERMITIAN_TOL: f64 = 1e-10;
const OFF_DIAGONAL_TOL: f64 = 1e-13;
const MAX_SWEEPS: usize = 100;

/// All eigenvalues of a Hermitian matrix, in descending order.
///
/// The input is accepted when `‖H − H*‖₂ ≤ 1e-10·max(1, ‖H‖₂)` and is
/// symmetrised before rotating. Sweeps stop once the off-diagonal
/// Hilbert–Schmidt mass drops to `1e-13·‖H‖₂`.
pub fn hermitian_eigenvalues(h: &Matrix) -> Result<Vec<f64>> {
    let n = h.require_square()?;
    let norm = h.hs_norm();
    let asymmetry = h.hermitian_defect()?;
    if asymmetry > HERMITIAN_TOL * norm.max(1.0) {
        return Err(Error::NotHermitian { asymmetry });
    }
    let mut a: Vec<C64> = h.hermitian_part()?.entries().to_vec();
    let target = OFF_DIAGONAL_TOL * norm;

    for _ in 0..MAX_SWEEPS {
        if off_diagonal(&a, n) <= target {
            let mut eig: Vec<f64> = (0..n).map(|k| a[k * n + k].re).collect();
            eig.sort_by(|x, y| y.total_cmp(x));
            return Ok(eig);
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
    }
    Err(Error::ConvergenceFailure { what: "Jacobi eigenvalue sweep", iterations: MAX_SWEEPS })
}

fn off_diagonal(a: &[C64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Annihilates a[p][q] with J = diag(1, e^{-iα})·[[c, s], [-s, c]] acting on
/// the (p, q) plane, replacing A by J* A J.
fn rotate(a: &mut [C64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r;
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;
    let zeta = (aqq - app) / (2.0 * r);
    let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let j_pp = C64::new(c, 0.0);
    let j_pq = C64::new(s, 0.0);
    let j_qp = -phase.conj() * s;
    let j_qq = phase.conj() * c;

    // A ← A J (columns p, q).
    for k in 0..n {
        let xp = a[k * n + p];
        let xq = a[k * n + q];
        a[k * n + p] = xp * j_pp + xq * j_qp;
        a[k * n + q] = xp * j_pq + xq * j_qq;
    }
    // A ← J* A (rows p, q).
    for k in 0..n {
        let xp = a[p * n + k];
        let xq = a[q * n + k];
        a[p * n + k] = j_pp.conj() * xp + j_qp.conj() * xq;
        a[q * n + k] = j_pq.conj() * xp + j_qq.conj() * xq;
    }
    a[p * n + q] = ZERO;
    a[q * n + p] = ZERO;
    a[p * n + p].im = 0.0;
    a[q * n + q].im = 0.0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensemble::{sample, EnsembleKind, EnsembleSpec};

    #[test]
    fn small_examples() {
        let d = Matrix::from_real(2, 2, &[3.0, 0.0, 0.0, 1.0]).unwrap();
        assert_eq!(hermitian_eigenvalues(&d).unwrap(), vec![3.0, 1.0]);
        let x = Matrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        let e = hermitian_eigenvalues(&x).unwrap();
        assert!((e[0] - 1.0).abs() < 1e-15 && (e[1] + 1.0).abs() < 1e-15);
    }

    #[test]
    fn complex_two_by_two_closed_form() {
        // [[a, c], [c̄, b]] has eigenvalues (a+b)/2 ± √(((a−b)/2)² + |c|²).
        let (a, b, c) = (0.7, -1.3, C64::new(0.4, -2.1));
        let h = Matrix::new(2, 2, vec![C64::new(a, 0.0), c, c.conj(), C64::new(b, 0.0)]).unwrap();
        let mid = (a + b) / 2.0;
        let rad = (((a - b) / 2.0).powi(2) + c.norm_sqr()).sqrt();
        let e = hermitian_eigenvalues(&h).unwrap();
        assert!((e[0] - (mid + rad)).abs() < 1e-14);
        assert!((e[1] - (mid - rad)).abs() < 1e-14);
    }

    #[test]
    fn trace_identities_on_hermitian_samples() {
        for seed in 0..40 {
            let n = 1 + (seed as usize % 10);
            let h = sample(&EnsembleSpec::new(EnsembleKind::Hermitian, n), seed).unwrap();
            let e = hermitian_eigenvalues(&h).unwrap();
            assert!(e.windows(2).all(|w| w[0] >= w[1]));
            let tr = h.trace().unwrap().re;
            let sum: f64 = e.iter().sum();
            let sq: f64 = e.iter().map(|x| x * x).sum();
            assert!((sum - tr).abs() <= 1e-10 * tr.abs().max(1.0));
            assert!((sq - h.hs_norm_sqr()).abs() <= 1e-10 * h.hs_norm_sqr());
        }
    }

    #[test]
    fn rejects_non_hermitian_and_non_square() {
        let s = Matrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(matches!(hermitian_eigenvalues(&s), Err(Error::NotHermitian { .. })));
        let r = Matrix::from_real(1, 2, &[0.0, 1.0]).unwrap();
        assert!(matches!(hermitian_eigenvalues(&r), Err(Error::NonSquare { .. })));
    }
}
