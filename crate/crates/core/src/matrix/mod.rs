//! Dense complex matrices.
//!
//! [`Matrix`] is value-semantic: every operation returns a new matrix and the
//! entries cannot be mutated after construction. Entries are stored row-major
//! and are always finite.

mod eigen;
mod io;
mod power;
mod qr;

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use eigen::hermitian_eigenvalues;
pub use io::MatrixFile;
pub use power::operator_norm;
pub use qr::householder_qr;

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl Matrix {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::BadDimension(rows.min(cols)));
        }
        if data.len() != rows * cols {
            return Err(Error::DimMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        if let Some(k) = data.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::NonFinite { row: k / cols, col: k % cols });
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Real matrix from row-major entries.
    pub fn from_real(rows: usize, cols: usize, data: &[f64]) -> Result<Self> {
        Self::new(rows, cols, data.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    /// Builds from nested rows; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimMismatch("ragged rows".into()));
        }
        Self::new(rows.len(), cols, rows.concat())
    }

    pub(crate) fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        assert!(rows > 0 && cols > 0, "empty matrix");
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub(crate) fn from_vec_unchecked(rows: usize, cols: usize, data: Vec<C64>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    /// n×n zero matrix. Panics if `n == 0`.
    pub fn zeros(n: usize) -> Self {
        Self::from_fn(n, n, |_, _| ZERO)
    }

    /// n×n identity. Panics if `n == 0`.
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { ONE } else { ZERO })
    }

    /// Diagonal matrix. Panics on an empty slice.
    pub fn diag(entries: &[C64]) -> Self {
        Self::from_fn(entries.len(), entries.len(), |i, j| if i == j { entries[i] } else { ZERO })
    }

    /// Rank-one matrix x y*.
    pub fn outer(x: &[C64], y: &[C64]) -> Self {
        Self::from_fn(x.len(), y.len(), |i, j| x[i] * y[j].conj())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Returns the dimension of a square matrix.
    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NonSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.cols + j]
    }

    pub fn entries(&self) -> &[C64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[C64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn adjoint(&self) -> Matrix {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn trace(&self) -> Result<C64> {
        let n = self.require_square()?;
        Ok((0..n).map(|k| self.get(k, k)).sum())
    }

    /// Σ|a_ij|², the squared Hilbert–Schmidt norm.
    pub fn hs_norm_sqr(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Hilbert–Schmidt (Frobenius) norm √tr(A*A).
    pub fn hs_norm(&self) -> f64 {
        self.hs_norm_sqr().sqrt()
    }

    /// Largest singular value; see [`operator_norm`].
    pub fn operator_norm(&self) -> Result<f64> {
        operator_norm(self)
    }

    pub fn scale(&self, c: C64) -> Matrix {
        self.map(|z| z * c)
    }

    pub fn scale_real(&self, c: f64) -> Matrix {
        self.map(|z| z * c)
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> Matrix {
        Matrix::from_vec_unchecked(self.rows, self.cols, self.data.iter().map(|&z| f(z)).collect())
    }

    /// a·self + b·other.
    pub fn lin_comb(&self, a: C64, other: &Matrix, b: C64) -> Result<Matrix> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(&x, &y)| a * x + b * y).collect();
        Ok(Matrix::from_vec_unchecked(self.rows, self.cols, data))
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.lin_comb(ONE, other, ONE)
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.lin_comb(ONE, other, -ONE)
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let (n, k, m) = (self.rows, self.cols, other.cols);
        let mut out = vec![ZERO; n * m];
        for i in 0..n {
            let out_row = &mut out[i * m..(i + 1) * m];
            for l in 0..k {
                let a = self.data[i * k + l];
                if a == ZERO {
                    continue;
                }
                for (o, &b) in out_row.iter_mut().zip(&other.data[l * m..(l + 1) * m]) {
                    *o += a * b;
                }
            }
        }
        Ok(Matrix::from_vec_unchecked(n, m, out))
    }

    /// Matrix-vector product.
    pub fn apply(&self, x: &[C64]) -> Vec<C64> {
        assert_eq!(x.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// ‖H − H*‖₂.
    pub fn hermitian_defect(&self) -> Result<f64> {
        let n = self.require_square()?;
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                s += (self.get(i, j) - self.get(j, i).conj()).norm_sqr();
            }
        }
        Ok(s.sqrt())
    }

    /// ‖A*A − AA*‖₂, zero exactly for normal matrices.
    pub fn normality_defect(&self) -> Result<f64> {
        self.require_square()?;
        let a_star = self.adjoint();
        let left = a_star.matmul(self)?;
        let right = self.matmul(&a_star)?;
        Ok((&left - &right).hs_norm())
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_defect()
            .map(|d| d <= tol * self.hs_norm().max(1.0))
            .unwrap_or(false)
    }

    /// (H + H*)/2.
    pub fn hermitian_part(&self) -> Result<Matrix> {
        self.require_square()?;
        Ok((self + &self.adjoint()).scale_real(0.5))
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }
}

/// Free-function form of [`Matrix::adjoint`].
pub fn adjoint(a: &Matrix) -> Matrix {
    a.adjoint()
}

/// Free-function form of [`Matrix::trace`].
pub fn trace(a: &Matrix) -> Result<C64> {
    a.trace()
}

/// Free-function form of [`Matrix::hs_norm`].
pub fn hs_norm(a: &Matrix) -> f64 {
    a.hs_norm()
}

// Operator impls panic on shape mismatch; the checked forms are `try_add`,
// `try_sub` and `matmul`.

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).expect("shape mismatch in matrix addition")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.try_sub(rhs).expect("shape mismatch in matrix subtraction")
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.matmul(rhs).expect("shape mismatch in matrix product")
    }
}

impl Mul<C64> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: C64) -> Matrix {
        self.scale(rhs)
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.map(|z| -z)
    }
}

pub(crate) fn vec_norm(x: &[C64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// ⟨x, y⟩ = Σ conj(x_i) y_i.
pub(crate) fn vec_dot(x: &[C64], y: &[C64]) -> C64 {
    x.iter().zip(y).map(|(a, b)| a.conj() * b).sum()
}
