//! ±1 value assignments to the nine square entries and the product rules
//! they would have to satisfy.

use std::fmt;

use super::square::{COLUMN_TARGETS, ROW_TARGETS};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignAssignment {
    values: [[i8; 3]; 3],
}

impl SignAssignment {
    pub fn new(values: [[i8; 3]; 3]) -> Result<Self> {
        if values.iter().flatten().all(|&v| v == 1 || v == -1) {
            Ok(Self { values })
        } else {
            Err(Error::InvalidSign)
        }
    }

    /// Bit `3r + c` set means entry `(r, c)` is −1.
    pub fn from_bits(bits: u16) -> Self {
        let values = std::array::from_fn(|r| {
            std::array::from_fn(|c| if bits >> (3 * r + c) & 1 == 1 { -1 } else { 1 })
        });
        Self { values }
    }

    /// Satisfies every rule except the second column.
    pub fn near_miss() -> Self {
        Self {
            values: [[-1, -1, 1], [1, -1, -1], [-1, -1, 1]],
        }
    }

    pub fn values(&self) -> &[[i8; 3]; 3] {
        &self.values
    }

    pub fn get(&self, row: usize, col: usize) -> i8 {
        self.values[row][col]
    }

    pub fn row_product(&self, r: usize) -> i8 {
        self.values[r].iter().product()
    }

    pub fn column_product(&self, c: usize) -> i8 {
        (0..3).map(|r| self.values[r][c]).product()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Constraint {
    Row(usize),
    Column(usize),
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::Row(r) => write!(f, "row {}", r + 1),
            Constraint::Column(c) => write!(f, "column {}", c + 1),
        }
    }
}

/// Required product of each row and column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductRules {
    pub rows: [i8; 3],
    pub columns: [i8; 3],
}

impl ProductRules {
    /// Signs of the operator products of the canonical square.
    pub fn mermin() -> Self {
        Self {
            rows: ROW_TARGETS,
            columns: COLUMN_TARGETS,
        }
    }

    pub fn constraints(&self) -> impl Iterator<Item = (Constraint, i8)> + '_ {
        (0..3)
            .map(|r| (Constraint::Row(r), self.rows[r]))
            .chain((0..3).map(|c| (Constraint::Column(c), self.columns[c])))
    }

    /// Product of all six targets.
    pub fn target_parity(&self) -> i8 {
        self.constraints().map(|(_, t)| t).product()
    }

    pub fn violations(&self, a: &SignAssignment) -> Vec<Constraint> {
        self.constraints()
            .filter(|&(c, target)| line_product(a, c) != target)
            .map(|(c, _)| c)
            .collect()
    }
}

fn line_product(a: &SignAssignment, c: Constraint) -> i8 {
    match c {
        Constraint::Row(r) => a.row_product(r),
        Constraint::Column(col) => a.column_product(col),
    }
}

/// Constraints of the canonical square that `a` violates.
pub fn score_assignment(a: &SignAssignment) -> Vec<Constraint> {
    ProductRules::mermin().violations(a)
}

/// The parity obstruction: the six line products multiply to the product of
/// all squared entries, so `forced` is +1 for every assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityCertificate {
    pub required: i8,
    pub forced: i8,
}

impl ParityCertificate {
    pub fn refutes(&self) -> bool {
        self.required != self.forced
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignSearch {
    pub solutions: Vec<SignAssignment>,
    pub checked: u32,
    pub min_violations: usize,
    /// `None` when the six line products do not share one parity across
    /// all assignments (cannot happen for 3×3 ±1 arrays).
    pub certificate: Option<ParityCertificate>,
}

/// Scans all 2⁹ assignments against the rules.
pub fn search_sign_assignments(rules: &ProductRules) -> SignSearch {
    let mut solutions = Vec::new();
    let mut min_violations = usize::MAX;
    let mut forced: Option<Option<i8>> = None;
    for bits in 0..512u16 {
        let a = SignAssignment::from_bits(bits);
        let violated = rules.violations(&a).len();
        min_violations = min_violations.min(violated);
        if violated == 0 {
            solutions.push(a);
        }
        let parity: i8 = rules
            .constraints()
            .map(|(c, _)| line_product(&a, c))
            .product();
        forced = match forced {
            None => Some(Some(parity)),
            Some(Some(p)) if p == parity => Some(Some(p)),
            _ => Some(None),
        };
    }
    SignSearch {
        solutions,
        checked: 512,
        min_violations,
        certificate: forced.flatten().map(|forced| ParityCertificate {
            required: rules.target_parity(),
            forced,
        }),
    }
}
