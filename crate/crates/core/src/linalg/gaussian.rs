//! Exact matrices over the Gaussian integers `Z[i]`.
//!
//! Pauli words only ever produce entries in {0, ±1, ±i}, so products,
//! commutators and identity checks on them can be decided without rounding.

use num_complex::{Complex, Complex64};

use super::ComplexMatrix;
use crate::error::{Error, Result};

pub type GaussianInt = Complex<i64>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianMatrix {
    dim: usize,
    data: Vec<GaussianInt>,
}

impl GaussianMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "matrix dimension must be at least 1");
        Self {
            dim,
            data: vec![GaussianInt::new(0, 0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = GaussianInt::new(1, 0);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianInt>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::NotSquare);
        }
        Ok(Self {
            dim,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> GaussianInt {
        self.data[row * self.dim + col]
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|&z| -z).collect(),
        }
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.data[i * n + j] = self.get(j, i).conj();
            }
        }
        out
    }

    pub fn kron(&self, other: &Self) -> Self {
        let (n, m) = (self.dim, other.dim);
        let mut out = Self::zeros(n * m);
        for i in 0..n * m {
            for j in 0..n * m {
                out.data[i * n * m + j] = self.get(i / m, j / m) * other.get(i % m, j % m);
            }
        }
        out
    }

    pub fn trace(&self) -> GaussianInt {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn is_hermitian(&self) -> bool {
        *self == self.adjoint()
    }

    /// Exact `AB == BA`.
    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        Ok(self.mul(other)? == other.mul(self)?)
    }

    /// `Some(+1)` if the matrix is `I`, `Some(-1)` if it is `−I`, else `None`.
    pub fn identity_sign(&self) -> Option<i8> {
        let id = Self::identity(self.dim);
        if *self == id {
            Some(1)
        } else if *self == id.neg() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn to_complex(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.dim, |i, j| {
            let z = self.get(i, j);
            Complex64::new(z.re as f64, z.im as f64)
        })
    }
}
