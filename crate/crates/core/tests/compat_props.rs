mod common;

use common::*;
use proptest::prelude::*;
use qtruth::compat::{
    common_refinement, commutes, conjunction, judge, single_framework_check, Connective,
    PropositionOutcome,
};
use qtruth::linalg::pauli;
use qtruth::mask::all_masks;
use qtruth::quantum::DecompositionOfIdentity;
use qtruth::random::{decomposition_in_basis, random_basis};
use qtruth::ComplexMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Oracle: every algebra element of `a` commutes with every one of `b`.
pub fn algebras_commute(a: &DecompositionOfIdentity, b: &DecompositionOfIdentity) -> bool {
    let ea: Vec<_> = all_masks(a.len()).map(|m| a.element(&m).unwrap()).collect();
    let eb: Vec<_> = all_masks(b.len()).map(|m| b.element(&m).unwrap()).collect();
    ea.iter().all(|p| {
        eb.iter()
            .all(|q| frob(&naive_mul(p, q), &naive_mul(q, p)) <= 1e-9)
    })
}

fn pair(seed: u64) -> (DecompositionOfIdentity, DecompositionOfIdentity) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = rng.gen_range(1..=6);
    let n1 = rng.gen_range(1..=dim.min(4));
    let n2 = rng.gen_range(1..=dim.min(4));
    let b1 = random_basis(dim, &mut rng);
    let b2 = if rng.gen_bool(0.5) {
        b1.clone()
    } else {
        random_basis(dim, &mut rng)
    };
    (
        decomposition_in_basis(&b1, n1, &mut rng, tol()).unwrap(),
        decomposition_in_basis(&b2, n2, &mut rng, tol()).unwrap(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn refinement_exists_iff_algebras_commute(seed in any::<u64>()) {
        let (a, b) = pair(seed);
        let report = common_refinement(&a, &b, tol()).unwrap();
        prop_assert_eq!(report.is_compatible(), algebras_commute(&a, &b));
        if let Some(r) = report.refinement() {
            prop_assert!(is_decomposition(r.cells(), 1e-9));
            for cell in a.cells().iter().chain(b.cells()) {
                prop_assert!(is_sum_of_cells(cell, r.cells(), 1e-9));
            }
        } else {
            let (j, k) = report.witness().unwrap();
            prop_assert!(!commutes(a.cell(j), b.cell(k), tol()).unwrap());
        }
    }

    #[test]
    fn conjunction_is_commutative_and_associative(seed in any::<u64>(), dim in 1usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let basis = random_basis(dim, &mut rng);
        let mut pick = || {
            let chosen: Vec<&[num_complex::Complex64]> =
                basis.iter().filter(|_| rng.gen_bool(0.5)).map(|v| v.as_slice()).collect();
            ComplexMatrix::outer_sum(dim, chosen)
        };
        let (p, q, r) = (pick(), pick(), pick());
        let and = |x: &ComplexMatrix, y: &ComplexMatrix| match conjunction(x, y, tol()).unwrap() {
            Connective::Projector(m) => m,
            Connective::Meaningless => panic!("commuting inputs"),
        };
        prop_assert!(frob(&and(&p, &q), &and(&q, &p)) <= 1e-10);
        prop_assert!(frob(&and(&and(&p, &q), &r), &and(&p, &and(&q, &r))) <= 1e-10);
    }

    #[test]
    fn framework_check_passes_iff_all_commute(seed in any::<u64>()) {
        let (a, b) = pair(seed);
        let props: Vec<ComplexMatrix> = a.cells().iter().chain(b.cells()).cloned().collect();
        let check = single_framework_check(&props, tol()).unwrap();
        let all = props.iter().all(|p| props.iter().all(|q| frob(&naive_mul(p, q), &naive_mul(q, p)) <= 1e-9));
        prop_assert_eq!(check.passed(), all);
    }
}

#[test]
fn noncommuting_conjunction_is_meaningless_not_zero() {
    let pz = pauli::eigenprojector(&pauli::z(), 1.0);
    let px = pauli::eigenprojector(&pauli::x(), 1.0);
    assert_eq!(
        conjunction(&pz, &px, tol()).unwrap(),
        Connective::Meaningless
    );
    let pz_minus = pauli::eigenprojector(&pauli::z(), -1.0);
    let zero = conjunction(&pz, &pz_minus, tol()).unwrap();
    assert!(zero.projector().unwrap().is_zero(tol()));
}

#[test]
fn meaningless_survives_negation() {
    let d = DecompositionOfIdentity::new(
        vec![
            pauli::eigenprojector(&pauli::z(), 1.0),
            pauli::eigenprojector(&pauli::z(), -1.0),
        ],
        tol(),
    )
    .unwrap();
    let theta = d.truth_functional(0).unwrap();
    let outcome = judge(&theta, &pauli::eigenprojector(&pauli::x(), 1.0)).unwrap();
    assert_eq!(outcome.tag(), "MEANINGLESS");
    assert_eq!(outcome.negate(), outcome);
    assert_eq!(PropositionOutcome::True.negate(), PropositionOutcome::False);
    assert_eq!(judge(&theta, d.cell(0)).unwrap(), PropositionOutcome::True);
}
