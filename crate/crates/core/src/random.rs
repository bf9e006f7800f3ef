//! Seeded random test objects: bases, decompositions, Hermitian matrices,
//! partitions and indicators.

use std::sync::Arc;

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::classical::{FinitePhaseSpace, Indicator};
use crate::error::Result;
use crate::linalg::{ComplexMatrix, Tolerance};
use crate::quantum::DecompositionOfIdentity;

fn random_scalar<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// Orthonormal basis of `C^dim` (Gram–Schmidt on random vectors).
pub fn random_basis<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vec<Vec<Complex64>> {
    let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(dim);
    while basis.len() < dim {
        let mut v: Vec<Complex64> = (0..dim).map(|_| random_scalar(rng)).collect();
        for _ in 0..2 {
            for b in &basis {
                let overlap: Complex64 = b.iter().zip(&v).map(|(bi, vi)| bi.conj() * vi).sum();
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi -= overlap * bi;
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            basis.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    basis
}

/// Splits `0..items` into `cells` nonempty groups.
pub fn random_partition<R: Rng + ?Sized>(
    items: usize,
    cells: usize,
    rng: &mut R,
) -> Vec<Vec<usize>> {
    assert!(cells >= 1 && cells <= items);
    let mut order: Vec<usize> = (0..items).collect();
    order.shuffle(rng);
    let mut groups: Vec<Vec<usize>> = order[..cells].iter().map(|&i| vec![i]).collect();
    for &i in &order[cells..] {
        groups[rng.gen_range(0..cells)].push(i);
    }
    for g in &mut groups {
        g.sort_unstable();
    }
    groups
}

/// Decomposition whose cells project onto groups of basis vectors.
pub fn decomposition_in_basis<R: Rng + ?Sized>(
    basis: &[Vec<Complex64>],
    cells: usize,
    rng: &mut R,
    tol: Tolerance,
) -> Result<DecompositionOfIdentity> {
    let dim = basis.len();
    let cells = random_partition(dim, cells, rng)
        .into_iter()
        .map(|group| {
            ComplexMatrix::outer_sum(dim, group.iter().map(|&i| basis[i].as_slice())).symmetrized()
        })
        .collect();
    DecompositionOfIdentity::new(cells, tol)
}

pub fn random_decomposition<R: Rng + ?Sized>(
    dim: usize,
    cells: usize,
    rng: &mut R,
    tol: Tolerance,
) -> Result<DecompositionOfIdentity> {
    let basis = random_basis(dim, rng);
    decomposition_in_basis(&basis, cells, rng, tol)
}

/// Dense Hermitian matrix with entries uniform in the unit square.
pub fn random_hermitian<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> ComplexMatrix {
    ComplexMatrix::from_fn(dim, |_, _| random_scalar(rng)).symmetrized()
}

/// `Σ λ_i v_i v_i†` over a random basis; repeated values give degenerate spectra.
pub fn hermitian_with_spectrum<R: Rng + ?Sized>(values: &[f64], rng: &mut R) -> ComplexMatrix {
    let dim = values.len();
    let basis = random_basis(dim, rng);
    let mut m = ComplexMatrix::zeros(dim);
    for (v, &lambda) in basis.iter().zip(values) {
        let p = ComplexMatrix::outer_sum(dim, [v.as_slice()]);
        m = m.add(&p.scale_real(lambda)).expect("same dimension");
    }
    m.symmetrized()
}

pub fn random_indicator<R: Rng + ?Sized>(space: &Arc<FinitePhaseSpace>, rng: &mut R) -> Indicator {
    let values = (0..space.len()).map(|_| rng.gen_bool(0.5)).collect();
    Indicator::new(space, values).expect("length matches space")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn basis_is_orthonormal() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let b = random_basis(5, &mut rng);
        for i in 0..5 {
            for j in 0..5 {
                let ip: Complex64 = b[i].iter().zip(&b[j]).map(|(x, y)| x.conj() * y).sum();
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((ip - expected).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn partitions_cover_everything_once() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let p = random_partition(9, 4, &mut rng);
            assert_eq!(p.len(), 4);
            assert!(p.iter().all(|g| !g.is_empty()));
            let mut all: Vec<usize> = p.concat();
            all.sort();
            assert_eq!(all, (0..9).collect::<Vec<_>>());
        }
    }
}
