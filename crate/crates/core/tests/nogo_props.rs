mod common;

use std::collections::BTreeSet;

use common::*;
use proptest::prelude::*;
use qtruth::linalg::pauli;
use qtruth::linalg::GaussianMatrix;
use qtruth::mask::all_masks;
use qtruth::nogo::{
    build_mermin_square, search_sign_assignments, square_frameworks, utf_search,
    verify_square_identities, FrameworkCollection, MerminSquare, ProductRules, SignAssignment,
};
use qtruth::quantum::{assign_value, joint_decomposition, Observable};
use qtruth::random::{decomposition_in_basis, random_basis};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Line operators, rows 1–3 then columns 1–3.
fn lines(sq: &MerminSquare) -> Vec<Vec<qtruth::ComplexMatrix>> {
    (0..3)
        .map(|r| sq.complex_row(r))
        .chain((0..3).map(|c| sq.complex_column(c)))
        .collect()
}

#[test]
fn every_line_functional_induces_an_admissible_triple() {
    let sq = build_mermin_square();
    let rules = ProductRules::mermin();
    let targets: Vec<i8> = rules.constraints().map(|(_, t)| t).collect();
    for (line, ops) in lines(&sq).iter().enumerate() {
        let framework = joint_decomposition(ops, tol()).unwrap();
        assert_eq!(framework.len(), 4);
        assert!(framework.cells().iter().all(|c| c.projector_rank() == 1));
        let observables: Vec<Observable> = ops
            .iter()
            .map(|m| Observable::new(m.clone(), tol()).unwrap())
            .collect();
        let mut triples = BTreeSet::new();
        for theta in framework.truth_functionals() {
            let triple: Vec<i8> = observables
                .iter()
                .map(|o| assign_value(&theta, o).unwrap())
                .map(|v| {
                    assert!((v.abs() - 1.0).abs() < 1e-12, "value {v}");
                    v.signum() as i8
                })
                .collect();
            assert_eq!(triple.iter().product::<i8>(), targets[line]);
            triples.insert(triple);
        }
        // Surjective onto the four ±1 triples with the required product.
        let admissible: BTreeSet<Vec<i8>> = (0..8u8)
            .map(|b| {
                (0..3)
                    .map(|i| if b >> i & 1 == 1 { -1 } else { 1 })
                    .collect::<Vec<i8>>()
            })
            .filter(|t| t.iter().product::<i8>() == targets[line])
            .collect();
        assert_eq!(triples, admissible, "line {line}");
    }
}

#[test]
fn sign_search_and_framework_search_agree() {
    let g = |m: &GaussianMatrix, n: &GaussianMatrix| m.kron(n);
    let (i, z) = (pauli::gidentity(), pauli::gz());
    let canonical = build_mermin_square();
    let negated_corner = canonical.clone().with_op(2, 2, canonical.op(2, 2).neg());
    let commuting = MerminSquare::from_ops([
        [g(&z, &i), g(&i, &z), g(&z, &z)],
        [g(&i, &z), g(&z, &i), g(&z, &z)],
        [g(&z, &z), g(&z, &z), g(&i, &i)],
    ]);
    for sq in [canonical, negated_corner, commuting] {
        let report = verify_square_identities(&sq);
        let rules = ProductRules {
            rows: report.row_products.map(Option::unwrap),
            columns: report.column_products.map(Option::unwrap),
        };
        let signs = search_sign_assignments(&rules);
        let fc = FrameworkCollection::new(square_frameworks(&sq, tol()).unwrap(), tol()).unwrap();
        let utf = utf_search(&fc);
        assert_eq!(signs.solutions.is_empty(), !utf.is_sat());
    }
}

#[test]
fn search_is_deterministic() {
    let sq = build_mermin_square();
    let run = || {
        utf_search(
            &FrameworkCollection::new(square_frameworks(&sq, tol()).unwrap(), tol()).unwrap(),
        )
    };
    let (a, b) = (run(), run());
    assert_eq!(a, b);
    assert!(!a.is_sat());
}

#[test]
fn near_miss_fails_exactly_column_two() {
    let v = ProductRules::mermin().violations(&SignAssignment::near_miss());
    assert_eq!(
        v.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        ["column 2"]
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn compatible_collections_are_sat(seed in any::<u64>(), count in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dim = rng.gen_range(1..=6);
        let basis = random_basis(dim, &mut rng);
        let frameworks: Vec<_> = (0..count)
            .map(|_| {
                let cells = rng.gen_range(1..=dim);
                decomposition_in_basis(&basis, cells, &mut rng, tol()).unwrap()
            })
            .collect();
        let fc = FrameworkCollection::new(frameworks, tol()).unwrap();
        let first = utf_search(&fc);
        prop_assert!(first.is_sat());
        prop_assert_eq!(&first, &utf_search(&fc));
        // Every basis vector picks one cell per framework; that choice must be found.
        for b in &basis {
            let p = ket_bra(b);
            let choice: Vec<usize> = fc
                .frameworks()
                .iter()
                .map(|f| (0..f.len()).find(|&k| frob(&naive_mul(f.cell(k), &p), &p) < 1e-8).unwrap())
                .collect();
            prop_assert!(first.solutions().contains(&choice));
        }
        // Every reported solution agrees on equal algebra elements, recomputed directly.
        for sol in first.solutions() {
            for (i, fi) in fc.frameworks().iter().enumerate() {
                for (j, fj) in fc.frameworks().iter().enumerate().skip(i + 1) {
                    for mi in all_masks(fi.len()) {
                        for mj in all_masks(fj.len()) {
                            if frob(&fi.element(&mi).unwrap(), &fj.element(&mj).unwrap()) < 1e-8 {
                                prop_assert_eq!(mi.contains(sol[i]), mj.contains(sol[j]));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn any_single_square_framework_has_four_solutions(line in 0usize..6) {
        let frameworks = square_frameworks(&build_mermin_square(), tol()).unwrap();
        let fc = FrameworkCollection::new(vec![frameworks[line].clone()], tol()).unwrap();
        prop_assert_eq!(utf_search(&fc).solutions().len(), 4);
    }
}
