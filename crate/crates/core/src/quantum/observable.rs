use super::{DecompositionOfIdentity, QuantumTruthFunctional};
use crate::error::{Error, Result};
use crate::linalg::{commutes, eigen_decompose_hermitian, ComplexMatrix, Tolerance};

/// Hermitian operator together with its spectral decomposition `A = Σ a_j D_j`.
#[derive(Debug, Clone)]
pub struct Observable {
    matrix: ComplexMatrix,
    spectral: DecompositionOfIdentity,
    values: Vec<f64>,
}

impl Observable {
    pub fn new(matrix: ComplexMatrix, tol: Tolerance) -> Result<Self> {
        let (spectral, values) = decomposition_from_observable(&matrix, tol)?;
        Ok(Self {
            matrix,
            spectral,
            values,
        })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Spectral projectors, one per distinct eigenvalue.
    pub fn spectral(&self) -> &DecompositionOfIdentity {
        &self.spectral
    }

    /// Eigenvalues, strictly decreasing and aligned with the spectral cells.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.values
    }
}

/// Spectral decomposition of a Hermitian matrix, cells ordered by
/// eigenvalue descending.
pub fn decomposition_from_observable(
    a: &ComplexMatrix,
    tol: Tolerance,
) -> Result<(DecompositionOfIdentity, Vec<f64>)> {
    let pairs = eigen_decompose_hermitian(a, tol)?;
    let values = pairs.iter().map(|p| p.value).collect();
    let cells = pairs.into_iter().map(|p| p.projector).collect();
    Ok((DecompositionOfIdentity::new(cells, tol)?, values))
}

/// `Σ_j a_j θ(D_j^A)`: the eigenvalue whose spectral projector is true.
pub fn assign_value(theta: &QuantumTruthFunctional<'_>, a: &Observable) -> Result<f64> {
    let mut total = 0.0;
    for (value, cell) in a.values.iter().zip(a.spectral.cells()) {
        total += value * f64::from(theta.eval(cell)?);
    }
    Ok(total)
}

/// Common refinement of the spectral decompositions of pairwise commuting
/// Hermitian matrices.
///
/// Cells are the nonzero products `D^1_{j1} ⋯ D^m_{jm}`, ordered
/// lexicographically by `(j1, …, jm)`.
pub fn joint_decomposition(
    observables: &[ComplexMatrix],
    tol: Tolerance,
) -> Result<DecompositionOfIdentity> {
    let first = observables.first().ok_or(Error::NoCells)?;
    for i in 0..observables.len() {
        for j in (i + 1)..observables.len() {
            if !commutes(&observables[i], &observables[j], tol)? {
                return Err(Error::NoncommutingFamily {
                    first: i,
                    second: j,
                });
            }
        }
    }
    let mut cells = vec![ComplexMatrix::identity(first.dim())];
    for a in observables {
        let (spectral, _) = decomposition_from_observable(a, tol)?;
        cells = refine_cells(&cells, spectral.cells(), tol)?;
    }
    DecompositionOfIdentity::new(cells, tol)
}

/// Nonzero products `P_j Q_k` in `(j, k)` lexicographic order, symmetrized.
pub(crate) fn refine_cells(
    left: &[ComplexMatrix],
    right: &[ComplexMatrix],
    tol: Tolerance,
) -> Result<Vec<ComplexMatrix>> {
    let mut out = Vec::new();
    for p in left {
        for q in right {
            let pq = p.mul(q)?.symmetrized();
            if !pq.is_zero(tol) {
                out.push(pq);
            }
        }
    }
    Ok(out)
}

/// Real polynomial in three commuting operators: `Σ c · A^i B^j C^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial3 {
    terms: Vec<(f64, [u32; 3])>,
}

impl Polynomial3 {
    pub fn new(terms: Vec<(f64, [u32; 3])>) -> Self {
        Self { terms }
    }

    pub fn eval_scalar(&self, a: f64, b: f64, c: f64) -> f64 {
        self.terms
            .iter()
            .map(|(coef, [i, j, k])| {
                coef * a.powi(*i as i32) * b.powi(*j as i32) * c.powi(*k as i32)
            })
            .sum()
    }

    pub fn eval_matrix(
        &self,
        a: &ComplexMatrix,
        b: &ComplexMatrix,
        c: &ComplexMatrix,
    ) -> Result<ComplexMatrix> {
        let dim = a.dim();
        let mut total = ComplexMatrix::zeros(dim);
        for (coef, exps) in &self.terms {
            let mut term = ComplexMatrix::identity(dim);
            for (m, &e) in [a, b, c].into_iter().zip(exps) {
                for _ in 0..e {
                    term = term.mul(m)?;
                }
            }
            total = total.add(&term.scale_real(*coef))?;
        }
        Ok(total)
    }
}

/// Whether `θ` respects the algebra of `p`: `v(p(A,B,C)) = p(v(A), v(B), v(C))`.
pub fn check_functional_consistency(
    theta: &QuantumTruthFunctional<'_>,
    a: &Observable,
    b: &Observable,
    c: &Observable,
    p: &Polynomial3,
) -> Result<bool> {
    let tol = theta.decomposition().tolerance();
    let (va, vb, vc) = (
        assign_value(theta, a)?,
        assign_value(theta, b)?,
        assign_value(theta, c)?,
    );
    let combined = p.eval_matrix(a.matrix(), b.matrix(), c.matrix())?;
    let lhs = assign_value(theta, &Observable::new(combined.symmetrized(), tol)?)?;
    let rhs = p.eval_scalar(va, vb, vc);
    Ok((lhs - rhs).abs() <= tol.eps() * (1.0 + rhs.abs()))
}
