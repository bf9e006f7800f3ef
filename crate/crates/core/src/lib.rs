//! Truth functionals on Boolean algebras of classical indicators and quantum
//! projectors, framework compatibility, and the magic-square no-go argument.
//!
//! - [`linalg`]: dense complex matrices, exact Gaussian-integer matrices and a
//!   Hermitian eigensolver returning spectral projectors.
//! - [`classical`]: finite phase spaces, indicators, coarse grainings and the
//!   point-evaluation universal truth functional.
//! - [`quantum`]: decompositions of the identity, their truth functionals and
//!   the eigenvalues they assign to observables.
//! - [`compat`]: commutation, MEANINGLESS conjunctions, common refinements.
//! - [`nogo`]: the magic square, sign-assignment refutation, and a search for
//!   universal truth functionals over collections of frameworks.
//!
//! ```
//! use qtruth::nogo::{build_mermin_square, verify_square_identities};
//!
//! let report = verify_square_identities(&build_mermin_square());
//! assert!(report.all_pass());
//! assert_eq!(report.column_products, [Some(1), Some(1), Some(-1)]);
//! ```

pub mod boolean;
pub mod classical;
pub mod cli;
pub mod compat;
mod error;
pub mod json;
pub mod linalg;
pub mod mask;
pub mod nogo;
pub mod quantum;
pub mod random;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, Tolerance};
pub use mask::CellMask;
