//! Dense complex linear algebra on small Hilbert spaces.

pub mod eigen;
pub mod gaussian;
mod matrix;
pub mod pauli;
mod tolerance;

pub use eigen::{eigen_decompose_hermitian, SpectralPair};
pub use gaussian::{GaussianInt, GaussianMatrix};
pub use matrix::{is_projector, multiply, ComplexMatrix, ComplexScalar, ONE, ZERO};
pub use tolerance::Tolerance;

/// `‖PQ − QP‖_F ≤ eps`.
pub fn commutes(
    p: &ComplexMatrix,
    q: &ComplexMatrix,
    tol: Tolerance,
) -> crate::error::Result<bool> {
    Ok(p.commutator(q)?.frobenius_norm() <= tol.eps())
}
