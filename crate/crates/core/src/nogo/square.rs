//! The two-qubit magic square and its exact operator identities.
//!
//! ```text
//!   X⊗I    I⊗X    X⊗X
//!   I⊗Y    Y⊗I    Y⊗Y
//!   X⊗Y    Y⊗X    Z⊗Z
//! ```
//!
//! The left tensor slot is particle `a`, the right slot particle `b`.

use std::fmt;

use crate::linalg::pauli::{gidentity, gx, gy, gz};
use crate::linalg::{ComplexMatrix, GaussianMatrix};

/// Required sign of each line product: rows all `+I`, columns `+I, +I, −I`.
pub const ROW_TARGETS: [i8; 3] = [1, 1, 1];
pub const COLUMN_TARGETS: [i8; 3] = [1, 1, -1];

/// A 3×3 array of 4×4 operators with exact Gaussian-integer entries.
///
/// [`build_mermin_square`] gives the canonical square; other squares can be
/// assembled with [`MerminSquare::from_ops`] and checked with
/// [`verify_square_identities`].
#[derive(Debug, Clone, PartialEq)]
pub struct MerminSquare {
    ops: [[GaussianMatrix; 3]; 3],
}

impl MerminSquare {
    pub fn from_ops(ops: [[GaussianMatrix; 3]; 3]) -> Self {
        Self { ops }
    }

    pub fn op(&self, row: usize, col: usize) -> &GaussianMatrix {
        &self.ops[row][col]
    }

    pub fn ops(&self) -> &[[GaussianMatrix; 3]; 3] {
        &self.ops
    }

    pub fn with_op(mut self, row: usize, col: usize, op: GaussianMatrix) -> Self {
        self.ops[row][col] = op;
        self
    }

    pub fn row(&self, r: usize) -> [&GaussianMatrix; 3] {
        [&self.ops[r][0], &self.ops[r][1], &self.ops[r][2]]
    }

    pub fn column(&self, c: usize) -> [&GaussianMatrix; 3] {
        [&self.ops[0][c], &self.ops[1][c], &self.ops[2][c]]
    }

    /// Floating-point copies (exact, since entries are in {0, ±1, ±i}).
    pub fn complex_row(&self, r: usize) -> Vec<ComplexMatrix> {
        self.row(r).iter().map(|m| m.to_complex()).collect()
    }

    pub fn complex_column(&self, c: usize) -> Vec<ComplexMatrix> {
        self.column(c).iter().map(|m| m.to_complex()).collect()
    }
}

/// Human-readable operator labels for the canonical square.
pub const LABELS: [[&str; 3]; 3] = [
    ["σa_x", "σb_x", "σa_x σb_x"],
    ["σb_y", "σa_y", "σa_y σb_y"],
    ["σa_x σb_y", "σa_y σb_x", "σa_z σb_z"],
];

pub fn build_mermin_square() -> MerminSquare {
    let (i, x, y, z) = (gidentity(), gx(), gy(), gz());
    MerminSquare {
        ops: [
            [x.kron(&i), i.kron(&x), x.kron(&x)],
            [i.kron(&y), y.kron(&i), y.kron(&y)],
            [x.kron(&y), y.kron(&x), z.kron(&z)],
        ],
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub passed: bool,
}

/// Every identity the square should satisfy, each decided exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
    /// `Some(±1)` when the ordered product of the line is `±I`.
    pub row_products: [Option<i8>; 3],
    pub column_products: [Option<i8>; 3],
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Renders a product sign as `+I`, `-I` or `?`.
pub fn sign_label(sign: Option<i8>) -> &'static str {
    match sign {
        Some(1) => "+I",
        Some(-1) => "-I",
        _ => "?",
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<_> = self.row_products.iter().map(|&s| sign_label(s)).collect();
        let cols: Vec<_> = self
            .column_products
            .iter()
            .map(|&s| sign_label(s))
            .collect();
        writeln!(f, "row products: {}", rows.join(" "))?;
        writeln!(f, "column products: {}", cols.join(" "))?;
        let passed = self.checks.iter().filter(|c| c.passed).count();
        write!(f, "checks passed: {}/{}", passed, self.checks.len())?;
        for c in self.failures() {
            write!(f, "\nFAILED: {}", c.name)?;
        }
        Ok(())
    }
}

fn line_product(line: [&GaussianMatrix; 3]) -> Option<i8> {
    let product = line[0].mul(line[1]).and_then(|m| m.mul(line[2])).ok()?;
    product.identity_sign()
}

/// Doubly degenerate ±1 spectrum on C⁴: Hermitian, `A² = I`, `tr A = 0`.
fn has_balanced_pm_one_spectrum(op: &GaussianMatrix) -> bool {
    op.is_hermitian()
        && matches!(op.mul(op).map(|m| m.identity_sign()), Ok(Some(1)))
        && op.trace() == num_complex::Complex::new(0, 0)
}

pub fn verify_square_identities(sq: &MerminSquare) -> IdentityReport {
    let mut checks = Vec::new();
    let mut check = |name: String, passed: bool| checks.push(IdentityCheck { name, passed });

    for r in 0..3 {
        for c in 0..3 {
            let op = sq.op(r, c);
            check(
                format!("op({},{}) is Hermitian", r + 1, c + 1),
                op.is_hermitian(),
            );
            check(
                format!("op({},{}) squares to I", r + 1, c + 1),
                matches!(op.mul(op).map(|m| m.identity_sign()), Ok(Some(1))),
            );
            check(
                format!("op({},{}) has eigenvalues ±1, each twofold", r + 1, c + 1),
                has_balanced_pm_one_spectrum(op),
            );
        }
    }
    for (kind, lines) in [
        ("row", [sq.row(0), sq.row(1), sq.row(2)]),
        ("column", [sq.column(0), sq.column(1), sq.column(2)]),
    ] {
        for (l, line) in lines.iter().enumerate() {
            for i in 0..3 {
                for j in (i + 1)..3 {
                    check(
                        format!("{kind} {}: ops {} and {} commute", l + 1, i + 1, j + 1),
                        line[i].commutes_with(line[j]).unwrap_or(false),
                    );
                }
            }
        }
    }
    let row_products = [0, 1, 2].map(|r| line_product(sq.row(r)));
    let column_products = [0, 1, 2].map(|c| line_product(sq.column(c)));
    for r in 0..3 {
        check(
            format!(
                "row {} product is {}",
                r + 1,
                sign_label(Some(ROW_TARGETS[r]))
            ),
            row_products[r] == Some(ROW_TARGETS[r]),
        );
    }
    for c in 0..3 {
        check(
            format!(
                "column {} product is {}",
                c + 1,
                sign_label(Some(COLUMN_TARGETS[c]))
            ),
            column_products[c] == Some(COLUMN_TARGETS[c]),
        );
    }
    IdentityReport {
        checks,
        row_products,
        column_products,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::pauli;

    #[test]
    fn canonical_entries() {
        let sq = build_mermin_square();
        let i = pauli::gidentity();
        assert_eq!(*sq.op(0, 0), pauli::gx().kron(&i));
        assert_eq!(*sq.op(1, 0), i.kron(&pauli::gy()));
        assert_eq!(*sq.op(2, 2), pauli::gz().kron(&pauli::gz()));
    }

    #[test]
    fn canonical_square_passes() {
        let report = verify_square_identities(&build_mermin_square());
        assert!(report.all_pass(), "{report}");
        assert_eq!(report.row_products, [Some(1), Some(1), Some(1)]);
        assert_eq!(report.column_products, [Some(1), Some(1), Some(-1)]);
        assert!(report.to_string().contains("column products: +I +I -I"));
    }

    #[test]
    fn swapped_entry_breaks_row_commutation() {
        let sq = build_mermin_square().with_op(0, 0, pauli::gy().kron(&pauli::gidentity()));
        let report = verify_square_identities(&sq);
        let failed: Vec<_> = report.failures().map(|c| c.name.as_str()).collect();
        assert!(failed.contains(&"row 1: ops 1 and 3 commute"), "{failed:?}");
        assert!(!failed.contains(&"row 1: ops 1 and 2 commute"));
    }

    #[test]
    fn identity_square_fails_third_column() {
        let id = GaussianMatrix::identity(4);
        let ops = std::array::from_fn(|_| std::array::from_fn(|_| id.clone()));
        let report = verify_square_identities(&MerminSquare::from_ops(ops));
        assert_eq!(report.row_products, [Some(1); 3]);
        assert_eq!(report.column_products, [Some(1); 3]);
        let failed: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
        assert!(failed.contains(&"column 3 product is -I".to_string()));
        assert!(!failed
            .iter()
            .any(|n| n.starts_with("row") && n.contains("product")));
    }
}
