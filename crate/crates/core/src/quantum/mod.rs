//! Decompositions of the identity, their projector Boolean algebras, truth
//! functionals and the eigenvalues they assign to observables.

mod decomposition;
mod observable;

pub use decomposition::{
    constructive_valuation, enumerate_truth_functionals, quantum_truth_eval,
    DecompositionOfIdentity, QuantumTruthFunctional,
};
pub use observable::{
    assign_value, check_functional_consistency, decomposition_from_observable, joint_decomposition,
    Observable, Polynomial3,
};

pub(crate) use observable::refine_cells;
