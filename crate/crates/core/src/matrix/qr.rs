use super::{vec_norm, Matrix, C64, ONE, ZERO};

/// Householder QR of a square matrix: returns unitary `Q` and upper-triangular
/// `R` with `A = QR`.
pub fn householder_qr(a: &Matrix) -> (Matrix, Matrix) {
    let n = a.rows();
    assert!(a.is_square(), "householder_qr expects a square matrix");
    let mut r = a.entries().to_vec();
    let mut reflectors: Vec<(usize, Vec<C64>)> = Vec::with_capacity(n);

    for k in 0..n {
        let x: Vec<C64> = (k..n).map(|i| r[i * n + k]).collect();
        let norm_x = vec_norm(&x);
        if norm_x == 0.0 {
            continue;
        }
        let phase = if x[0] == ZERO { ONE } else { x[0] / x[0].norm() };
        let alpha = -phase * norm_x;
        let mut v = x;
        v[0] -= alpha;
        let norm_v = vec_norm(&v);
        if norm_v == 0.0 {
            continue;
        }
        v.iter_mut().for_each(|z| *z /= norm_v);
        for j in k..n {
            let s: C64 = (k..n).map(|i| v[i - k].conj() * r[i * n + j]).sum();
            for i in k..n {
                r[i * n + j] -= v[i - k] * (s * 2.0);
            }
        }
        for i in k + 1..n {
            r[i * n + k] = ZERO;
        }
        reflectors.push((k, v));
    }

    let mut q = Matrix::identity(n).entries().to_vec();
    for (k, v) in reflectors.iter().rev() {
        for j in 0..n {
            let s: C64 = (*k..n).map(|i| v[i - k].conj() * q[i * n + j]).sum();
            for i in *k..n {
                q[i * n + j] -= v[i - k] * (s * 2.0);
            }
        }
    }
    (Matrix::from_vec_unchecked(n, n, q), Matrix::from_vec_unchecked(n, n, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensemble::{sample, EnsembleKind, EnsembleSpec};

    #[test]
    fn reconstructs_and_is_unitary() {
        for seed in 0..20 {
            let n = 1 + seed as usize % 7;
            let a = sample(&EnsembleSpec::new(EnsembleKind::Ginibre, n), seed).unwrap();
            let (q, r) = householder_qr(&a);
            assert!((&(&q * &r) - &a).hs_norm() <= 1e-12 * a.hs_norm());
            assert!((&(&q.adjoint() * &q) - &Matrix::identity(n)).hs_norm() <= 1e-12);
            for i in 0..n {
                for j in 0..i {
                    assert_eq!(r.get(i, j), ZERO);
                }
            }
        }
    }
}
