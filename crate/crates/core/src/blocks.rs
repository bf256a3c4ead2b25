//! 2×2 block matrices `[[A, B], [C, D]]` acting on `ℂⁿ ⊕ ℂⁿ`.
//!
//! A [`Block2x2`] keeps the four blocks alongside the assembled `2n × 2n`
//! matrix. Radii are always computed on the assembled matrix so that block
//! identities are checked against an independent evaluation.

use crate::error::{Error, Result};
use crate::matrix::{Matrix, ZERO};
use crate::radius::{w2nu_closed, RadiusResult};
use crate::weighted::{weighted_imag, weighted_real, Weight};

#[derive(Debug, Clone, PartialEq)]
pub struct Block2x2 {
    a: Matrix,
    b: Matrix,
    c: Matrix,
    d: Matrix,
    realized: Matrix,
}

impl Block2x2 {
    pub fn new(a: Matrix, b: Matrix, c: Matrix, d: Matrix) -> Result<Self> {
        let n = a.require_square()?;
        for (name, m) in [("B", &b), ("C", &c), ("D", &d)] {
            let k = m.require_square()?;
            if k != n {
                return Err(Error::DimMismatch(format!("block {name} is {k}x{k}, expected {n}x{n}")));
            }
        }
        let realized = Matrix::from_fn(2 * n, 2 * n, |i, j| {
            let block = match (i < n, j < n) {
                (true, true) => &a,
                (true, false) => &b,
                (false, true) => &c,
                (false, false) => &d,
            };
            block.get(i % n, j % n)
        });
        Ok(Block2x2 { a, b, c, d, realized })
    }

    /// Block size `n`; the realized matrix is `2n × 2n`.
    pub fn block_dim(&self) -> usize {
        self.a.rows()
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn b(&self) -> &Matrix {
        &self.b
    }

    pub fn c(&self) -> &Matrix {
        &self.c
    }

    pub fn d(&self) -> &Matrix {
        &self.d
    }

    pub fn realized(&self) -> &Matrix {
        &self.realized
    }

    /// `w_(2,ν)` of the realized matrix.
    pub fn w2nu(&self, nu: Weight) -> Result<RadiusResult> {
        w2nu_closed(&self.realized, nu)
    }
}

fn zeros_like(a: &Matrix) -> Matrix {
    Matrix::from_fn(a.rows(), a.cols(), |_, _| ZERO)
}

/// `[[0, A], [B, 0]]`.
pub fn offdiag(a: &Matrix, b: &Matrix) -> Result<Block2x2> {
    let z = zeros_like(a);
    Block2x2::new(z.clone(), a.clone(), b.clone(), z)
}

/// `[[A, 0], [0, B]]`.
pub fn diag2(a: &Matrix, b: &Matrix) -> Result<Block2x2> {
    let z = zeros_like(a);
    Block2x2::new(a.clone(), z.clone(), z, b.clone())
}

/// `[[A, B], [C, D]]`.
pub fn block2(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Result<Block2x2> {
    Block2x2::new(a.clone(), b.clone(), c.clone(), d.clone())
}

/// `[[0, 𝔯_ν(A)], [𝔦_ν(A), 0]]`.
pub fn ri_block(a: &Matrix, nu: Weight) -> Result<Block2x2> {
    offdiag(&weighted_real(a, nu)?, &weighted_imag(a, nu)?)
}
