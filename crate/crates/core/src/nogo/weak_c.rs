//! Two truth functionals on incompatible frameworks that happen to agree on
//! a shared operator.
//!
//! `θ′` lives on the first row's framework and realizes the row values
//! (−1, −1, +1); `θ″` lives on the first column's framework and realizes
//! (−1, +1, −1). Both give `σa_x = −1`, yet `θ′` fixes `σb_x` while `θ″`
//! fixes `σb_y`, and the two frameworks have no common refinement.

use crate::compat::{common_refinement, CompatibilityReport};
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, Tolerance};
use crate::quantum::{assign_value, joint_decomposition, DecompositionOfIdentity, Observable};

use super::signs::SignAssignment;
use super::square::{build_mermin_square, MerminSquare};

/// A truth functional on a line's framework and the values it assigns.
#[derive(Debug, Clone, PartialEq)]
pub struct LineFunctional {
    pub framework: DecompositionOfIdentity,
    pub cell: usize,
    pub values: [f64; 3],
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeakCReport {
    pub theta_prime: LineFunctional,
    pub theta_double_prime: LineFunctional,
    /// `θ′(σa_x)` and `θ″(σa_x)`.
    pub shared_values: (f64, f64),
    /// `θ′(σb_x)`.
    pub prime_bx: f64,
    /// `θ″(σb_y)`.
    pub double_prime_by: f64,
    pub compatibility: CompatibilityReport,
}

impl WeakCReport {
    pub fn frameworks_compatible(&self) -> bool {
        self.compatibility.is_compatible()
    }
}

/// Finds the cell of the joint decomposition of `ops` whose truth functional
/// assigns exactly `targets`.
pub fn realize_line(
    ops: &[ComplexMatrix],
    targets: [i8; 3],
    tol: Tolerance,
) -> Result<LineFunctional> {
    let framework = joint_decomposition(ops, tol)?;
    let observables = ops
        .iter()
        .map(|m| Observable::new(m.clone(), tol))
        .collect::<Result<Vec<_>>>()?;
    let mut found = None;
    for theta in framework.truth_functionals() {
        let mut values = [0.0; 3];
        for (v, obs) in values.iter_mut().zip(&observables) {
            *v = assign_value(&theta, obs)?;
        }
        let hit = values
            .iter()
            .zip(targets)
            .all(|(v, t)| (v - f64::from(t)).abs() <= tol.eps());
        if hit {
            found = Some(theta.cell());
            break;
        }
    }
    if let Some(cell) = found {
        return Ok(LineFunctional {
            framework,
            cell,
            values: targets.map(f64::from),
        });
    }
    Err(Error::ConstructionFailure(format!(
        "no cell realizes the values {targets:?}"
    )))
}

pub fn weak_c_demo_on(sq: &MerminSquare, tol: Tolerance) -> Result<WeakCReport> {
    let a = SignAssignment::near_miss();
    let row = [a.get(0, 0), a.get(0, 1), a.get(0, 2)];
    let col = [a.get(0, 0), a.get(1, 0), a.get(2, 0)];
    let theta_prime = realize_line(&sq.complex_row(0), row, tol)?;
    let theta_double_prime = realize_line(&sq.complex_column(0), col, tol)?;
    let compatibility =
        common_refinement(&theta_prime.framework, &theta_double_prime.framework, tol)?;
    Ok(WeakCReport {
        shared_values: (theta_prime.values[0], theta_double_prime.values[0]),
        prime_bx: theta_prime.values[1],
        double_prime_by: theta_double_prime.values[1],
        theta_prime,
        theta_double_prime,
        compatibility,
    })
}

pub fn weak_c_demo() -> Result<WeakCReport> {
    weak_c_demo_on(&build_mermin_square(), Tolerance::default())
}
