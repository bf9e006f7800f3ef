//! Spectral decomposition of Hermitian matrices, `A = Σ a_j D_j`.
//!
//! Eigenvectors come from a cyclic complex Jacobi iteration. Eigenvalues
//! are sorted descending and adjacent values within `eps` are merged, so each
//! returned projector spans a whole (numerical) eigenspace.

use num_complex::Complex64;

use super::{ComplexMatrix, Tolerance};
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// One eigenvalue with the projector onto its eigenspace.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralPair {
    pub value: f64,
    pub projector: ComplexMatrix,
}

/// Eigenvalues (unsorted) and the unitary whose columns are eigenvectors.
struct JacobiResult {
    values: Vec<f64>,
    vectors: ComplexMatrix,
}

fn jacobi(a: &ComplexMatrix) -> JacobiResult {
    let n = a.dim();
    let mut m = a.symmetrized();
    let mut v = ComplexMatrix::identity(n);
    let scale = m.frobenius_norm().max(f64::MIN_POSITIVE);

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m.get(i, j).norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
    }

    JacobiResult {
        values: (0..n).map(|i| m.get(i, i).re).collect(),
        vectors: v,
    }
}

/// Zeroes `m[p][q]` with a unitary plane rotation `J`: `m ← J† m J`, `v ← v J`.
fn rotate(m: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let n = m.dim();
    let apq = m.get(p, q);
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let app = m.get(p, p).re;
    let aqq = m.get(q, q).re;
    // Remove the phase of a_pq, then apply the real symmetric Jacobi rotation.
    let phase = apq / r;
    let tau = (aqq - app) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // J restricted to (p, q): [[c, s], [-s·conj(phase), c·conj(phase)]]
    let jpp = Complex64::new(c, 0.0);
    let jpq = Complex64::new(s, 0.0);
    let jqp = -phase.conj() * s;
    let jqq = phase.conj() * c;

    let data = m.data_mut();
    for i in 0..n {
        let aip = data[i * n + p];
        let aiq = data[i * n + q];
        data[i * n + p] = aip * jpp + aiq * jqp;
        data[i * n + q] = aip * jpq + aiq * jqq;
    }
    for j in 0..n {
        let apj = data[p * n + j];
        let aqj = data[q * n + j];
        data[p * n + j] = jpp.conj() * apj + jqp.conj() * aqj;
        data[q * n + j] = jpq.conj() * apj + jqq.conj() * aqj;
    }
    data[p * n + q] = Complex64::new(0.0, 0.0);
    data[q * n + p] = Complex64::new(0.0, 0.0);
    data[p * n + p] = Complex64::new(data[p * n + p].re, 0.0);
    data[q * n + q] = Complex64::new(data[q * n + q].re, 0.0);

    let vd = v.data_mut();
    for i in 0..n {
        let vip = vd[i * n + p];
        let viq = vd[i * n + q];
        vd[i * n + p] = vip * jpp + viq * jqp;
        vd[i * n + q] = vip * jpq + viq * jqq;
    }
}

/// Spectral pairs of a Hermitian matrix, eigenvalues strictly decreasing.
pub fn eigen_decompose_hermitian(a: &ComplexMatrix, tol: Tolerance) -> Result<Vec<SpectralPair>> {
    let deviation = a.hermitian_deviation();
    if deviation > tol.eps() {
        return Err(Error::NotHermitian { deviation });
    }
    let n = a.dim();
    let JacobiResult { values, vectors } = jacobi(a);

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[j].total_cmp(&values[i]));

    // Greedy merge of adjacent sorted eigenvalues.
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for &idx in &order {
        match clusters.last_mut() {
            Some(cluster) if values[*cluster.last().unwrap()] - values[idx] <= tol.eps() => {
                cluster.push(idx)
            }
            _ => clusters.push(vec![idx]),
        }
    }

    let columns: Vec<Vec<Complex64>> = (0..n)
        .map(|j| (0..n).map(|i| vectors.get(i, j)).collect())
        .collect();

    Ok(clusters
        .into_iter()
        .map(|cluster| {
            let value = cluster.iter().map(|&i| values[i]).sum::<f64>() / cluster.len() as f64;
            let projector =
                ComplexMatrix::outer_sum(n, cluster.iter().map(|&i| columns[i].as_slice()))
                    .symmetrized();
            SpectralPair { value, projector }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::pauli;

    #[test]
    fn sigma_z_is_already_diagonal() {
        let pairs = eigen_decompose_hermitian(&pauli::z(), Tolerance::default()).unwrap();
        assert_eq!(pairs.len(), 2);
        assert_eq!(pairs[0].value, 1.0);
        assert_eq!(
            pairs[0].projector,
            ComplexMatrix::from_real_diagonal(&[1.0, 0.0])
        );
        assert_eq!(pairs[1].value, -1.0);
        assert_eq!(
            pairs[1].projector,
            ComplexMatrix::from_real_diagonal(&[0.0, 1.0])
        );
    }

    #[test]
    fn xx_has_two_doubly_degenerate_eigenvalues() {
        let tol = Tolerance::default();
        let xx = pauli::x().kron(&pauli::x());
        let pairs = eigen_decompose_hermitian(&xx, tol).unwrap();
        assert_eq!(pairs.len(), 2);
        assert!((pairs[0].value - 1.0).abs() < 1e-12);
        assert!((pairs[1].value + 1.0).abs() < 1e-12);
        for pair in &pairs {
            assert!(pair.projector.is_projector(tol));
            assert_eq!(pair.projector.projector_rank(), 2);
        }
    }

    #[test]
    fn identity_is_one_cluster() {
        for dim in 1..6 {
            let pairs =
                eigen_decompose_hermitian(&ComplexMatrix::identity(dim), Tolerance::default())
                    .unwrap();
            assert_eq!(pairs.len(), 1);
            assert_eq!(pairs[0].value, 1.0);
            assert_eq!(pairs[0].projector, ComplexMatrix::identity(dim));
        }
    }

    #[test]
    fn non_hermitian_rejected() {
        let m = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        assert!(matches!(
            eigen_decompose_hermitian(&m, Tolerance::default()),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn sigma_y_complex_eigenvectors() {
        let tol = Tolerance::default();
        let pairs = eigen_decompose_hermitian(&pauli::y(), tol).unwrap();
        assert!(pairs[0]
            .projector
            .approx_eq(&pauli::eigenprojector(&pauli::y(), 1.0), tol));
        assert!(pairs[1]
            .projector
            .approx_eq(&pauli::eigenprojector(&pauli::y(), -1.0), tol));
    }
}
