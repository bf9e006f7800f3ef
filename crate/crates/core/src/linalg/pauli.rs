//! Single-qubit Pauli matrices, in floating point and in exact form.

use num_complex::Complex64;

use super::gaussian::{GaussianInt, GaussianMatrix};
use super::ComplexMatrix;

fn g(re: i64, im: i64) -> GaussianInt {
    GaussianInt::new(re, im)
}

pub fn gidentity() -> GaussianMatrix {
    GaussianMatrix::identity(2)
}

pub fn gx() -> GaussianMatrix {
    GaussianMatrix::from_rows(vec![vec![g(0, 0), g(1, 0)], vec![g(1, 0), g(0, 0)]]).unwrap()
}

pub fn gy() -> GaussianMatrix {
    GaussianMatrix::from_rows(vec![vec![g(0, 0), g(0, -1)], vec![g(0, 1), g(0, 0)]]).unwrap()
}

pub fn gz() -> GaussianMatrix {
    GaussianMatrix::from_rows(vec![vec![g(1, 0), g(0, 0)], vec![g(0, 0), g(-1, 0)]]).unwrap()
}

pub fn identity() -> ComplexMatrix {
    ComplexMatrix::identity(2)
}

pub fn x() -> ComplexMatrix {
    gx().to_complex()
}

pub fn y() -> ComplexMatrix {
    gy().to_complex()
}

pub fn z() -> ComplexMatrix {
    gz().to_complex()
}

/// `(I + sign·σ)/2`, the projector onto the `sign` eigenspace of a Pauli matrix.
pub fn eigenprojector(sigma: &ComplexMatrix, sign: f64) -> ComplexMatrix {
    let id = ComplexMatrix::identity(sigma.dim());
    id.add(&sigma.scale(Complex64::new(sign, 0.0)))
        .expect("same dimension")
        .scale_real(0.5)
}
