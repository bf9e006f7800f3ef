use std::fmt;

use num_complex::Complex64;

use super::Tolerance;
use crate::error::{Error, Result};

/// Scalar type for all operators. Constructors reject NaN and infinities.
pub type ComplexScalar = Complex64;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Dense square complex matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// # Panics
    /// If `dim == 0`.
    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "matrix dimension must be at least 1");
        Self {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    /// # Panics
    /// If `dim == 0`.
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::NotSquare);
        }
        let mut data = Vec::with_capacity(dim * dim);
        for (row, entries) in rows.into_iter().enumerate() {
            for (col, z) in entries.into_iter().enumerate() {
                if !(z.re.is_finite() && z.im.is_finite()) {
                    return Err(Error::NonFinite { row, col });
                }
                data.push(z);
            }
        }
        Ok(Self { dim, data })
    }

    /// Real-valued rows, convenient for tests and literals.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
                .collect(),
        )
    }

    /// # Panics
    /// If `dim == 0` or `f` produces a non-finite value.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                let z = f(i, j);
                assert!(z.re.is_finite() && z.im.is_finite(), "non-finite entry");
                m.data[i * dim + j] = z;
            }
        }
        m
    }

    /// # Panics
    /// If `diag` is empty.
    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * diag.len() + i] = Complex64::new(d, 0.0);
        }
        m
    }

    /// Projector onto the span of an orthonormal set of vectors: `sum v v^H`.
    pub fn outer_sum<'a>(dim: usize, vectors: impl IntoIterator<Item = &'a [Complex64]>) -> Self {
        let mut m = Self::zeros(dim);
        for v in vectors {
            debug_assert_eq!(v.len(), dim);
            for i in 0..dim {
                for j in 0..dim {
                    m.data[i * dim + j] += v[i] * v[j].conj();
                }
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Complex64]> {
        self.data.chunks(self.dim)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            })
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        Self {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|&z| z * factor).collect(),
        }
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    /// Kronecker product `self ⊗ other`; `self` occupies the left (slower) slot.
    pub fn kron(&self, other: &Self) -> Self {
        let (n, m) = (self.dim, other.dim);
        Self::from_fn(n * m, |i, j| {
            self.get(i / m, j / m) * other.get(i % m, j % m)
        })
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `‖self − other‖_F`.
    pub fn distance(&self, other: &Self) -> Result<f64> {
        self.check_dim(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt())
    }

    pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        matches!(self.distance(other), Ok(d) if d <= tol.eps())
    }

    pub fn is_zero(&self, tol: Tolerance) -> bool {
        self.frobenius_norm() <= tol.eps()
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn hermitian_deviation(&self) -> f64 {
        let n = self.dim;
        let mut sum = 0.0;
        for i in 0..n {
            for j in 0..n {
                sum += (self.get(i, j) - self.get(j, i).conj()).norm_sqr();
            }
        }
        sum.sqrt()
    }

    pub fn is_hermitian(&self, tol: Tolerance) -> bool {
        self.hermitian_deviation() <= tol.eps()
    }

    /// `‖P² − P‖_F ≤ eps` and `‖P − P†‖_F ≤ eps`.
    pub fn is_projector(&self, tol: Tolerance) -> bool {
        if !self.is_hermitian(tol) {
            return false;
        }
        let sq = self.mul(self).expect("same dimension");
        matches!(sq.distance(self), Ok(d) if d <= tol.eps())
    }

    /// `(A + A†)/2`.
    pub fn symmetrized(&self) -> Self {
        let n = self.dim;
        Self::from_fn(n, |i, j| (self.get(i, j) + self.get(j, i).conj()) * 0.5)
    }

    /// Rank of a projector, read off its trace.
    pub fn projector_rank(&self) -> usize {
        self.trace().re.round().max(0.0) as usize
    }

    pub(crate) fn data_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{})", self.dim, self.dim)?;
        for row in self.rows() {
            let cells: Vec<String> = row
                .iter()
                .map(|z| format!("{:+.4}{:+.4}i", z.re, z.im))
                .collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Matrix product with dimension checking.
pub fn multiply(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    a.mul(b)
}

pub fn is_projector(p: &ComplexMatrix, tol: Tolerance) -> bool {
    p.is_projector(tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::pauli;

    #[test]
    fn identity_times_identity() {
        let i = ComplexMatrix::identity(3);
        assert_eq!(multiply(&i, &i).unwrap(), i);
    }

    #[test]
    fn pauli_commutator_is_two_i_sigma_z() {
        let (x, y, z) = (pauli::x(), pauli::y(), pauli::z());
        let comm = x.commutator(&y).unwrap();
        assert_eq!(comm, z.scale(Complex64::new(0.0, 2.0)));
    }

    #[test]
    fn tensor_slots_multiply_independently() {
        let i2 = pauli::identity();
        let lhs = pauli::x().kron(&i2).mul(&i2.kron(&pauli::y())).unwrap();
        assert_eq!(lhs, pauli::x().kron(&pauli::y()));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let err = ComplexMatrix::identity(2)
            .mul(&ComplexMatrix::identity(3))
            .unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { left: 2, right: 3 });
    }

    #[test]
    fn projector_predicate() {
        let tol = Tolerance::default();
        let half_y = ComplexMatrix::identity(2)
            .add(&pauli::y())
            .unwrap()
            .scale_real(0.5);
        assert!(is_projector(&half_y, tol));
        assert!(!is_projector(&pauli::x(), tol));
        assert!(is_projector(&ComplexMatrix::zeros(4), tol));
    }

    #[test]
    fn rejects_non_finite_and_ragged() {
        let nan = Complex64::new(f64::NAN, 0.0);
        assert_eq!(
            ComplexMatrix::from_rows(vec![vec![ONE, nan], vec![ZERO, ONE]]).unwrap_err(),
            Error::NonFinite { row: 0, col: 1 }
        );
        assert_eq!(
            ComplexMatrix::from_rows(vec![vec![ONE, ZERO]]).unwrap_err(),
            Error::NotSquare
        );
        assert_eq!(
            ComplexMatrix::from_rows(vec![]).unwrap_err(),
            Error::NotSquare
        );
    }
}
