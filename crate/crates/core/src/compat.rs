//! Compatibility of quantum properties and frameworks.
//!
//! A conjunction of noncommuting projectors is MEANINGLESS: it has no truth
//! value at all, which is different from being false. In particular it is
//! never the zero projector.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, Tolerance};
use crate::quantum::{refine_cells, DecompositionOfIdentity, QuantumTruthFunctional};

pub use crate::linalg::commutes;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PropositionOutcome {
    True,
    False,
    Meaningless { detail: Option<String> },
}

impl PropositionOutcome {
    pub fn meaningless(detail: impl Into<String>) -> Self {
        Self::Meaningless {
            detail: Some(detail.into()),
        }
    }

    pub fn negate(&self) -> Self {
        match self {
            Self::True => Self::False,
            Self::False => Self::True,
            Self::Meaningless { detail } => Self::Meaningless {
                detail: detail.clone(),
            },
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Self::True => "TRUE",
            Self::False => "FALSE",
            Self::Meaningless { .. } => "MEANINGLESS",
        }
    }
}

impl fmt::Display for PropositionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Truth value of `p` within the framework of `theta`.
///
/// Properties outside the framework (noncommuting, or splitting a cell)
/// are MEANINGLESS there.
pub fn judge(theta: &QuantumTruthFunctional<'_>, p: &ComplexMatrix) -> Result<PropositionOutcome> {
    match theta.eval(p) {
        Ok(1) => Ok(PropositionOutcome::True),
        Ok(_) => Ok(PropositionOutcome::False),
        Err(e @ (Error::NoncommutingProjector { .. } | Error::NotInAlgebra { .. })) => {
            Ok(PropositionOutcome::meaningless(e.to_string()))
        }
        Err(e) => Err(e),
    }
}

/// A projector, or no property at all.
#[derive(Debug, Clone, PartialEq)]
pub enum Connective {
    Projector(ComplexMatrix),
    Meaningless,
}

impl Connective {
    pub fn projector(&self) -> Option<&ComplexMatrix> {
        match self {
            Self::Projector(p) => Some(p),
            Self::Meaningless => None,
        }
    }

    pub fn is_meaningless(&self) -> bool {
        matches!(self, Self::Meaningless)
    }
}

/// `P ∧ Q = PQ` when the projectors commute, otherwise MEANINGLESS.
pub fn conjunction(p: &ComplexMatrix, q: &ComplexMatrix, tol: Tolerance) -> Result<Connective> {
    if commutes(p, q, tol)? {
        Ok(Connective::Projector(p.mul(q)?.symmetrized()))
    } else {
        Ok(Connective::Meaningless)
    }
}

/// `P ∨ Q = P + Q − PQ` when the projectors commute, otherwise MEANINGLESS.
pub fn disjunction(p: &ComplexMatrix, q: &ComplexMatrix, tol: Tolerance) -> Result<Connective> {
    if commutes(p, q, tol)? {
        Ok(Connective::Projector(
            p.add(q)?.sub(&p.mul(q)?)?.symmetrized(),
        ))
    } else {
        Ok(Connective::Meaningless)
    }
}

/// `I − P`; always meaningful.
pub fn negation(p: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::identity(p.dim())
        .sub(p)
        .expect("same dimension")
}

/// Outcome of comparing two frameworks.
#[derive(Debug, Clone, PartialEq)]
pub enum CompatibilityReport {
    Compatible {
        refinement: DecompositionOfIdentity,
    },
    /// First noncommuting cell pair `(j, k)` in lexicographic scan order.
    Incompatible {
        witness: (usize, usize),
    },
}

impl CompatibilityReport {
    pub fn is_compatible(&self) -> bool {
        matches!(self, Self::Compatible { .. })
    }

    pub fn witness(&self) -> Option<(usize, usize)> {
        match self {
            Self::Incompatible { witness } => Some(*witness),
            Self::Compatible { .. } => None,
        }
    }

    pub fn refinement(&self) -> Option<&DecompositionOfIdentity> {
        match self {
            Self::Compatible { refinement } => Some(refinement),
            Self::Incompatible { .. } => None,
        }
    }
}

/// Common refinement `{D1_j · D2_k ≠ 0}` when every cell of one commutes with
/// every cell of the other.
pub fn common_refinement(
    d1: &DecompositionOfIdentity,
    d2: &DecompositionOfIdentity,
    tol: Tolerance,
) -> Result<CompatibilityReport> {
    if d1.dim() != d2.dim() {
        return Err(Error::DimensionMismatch {
            left: d1.dim(),
            right: d2.dim(),
        });
    }
    for (j, p) in d1.cells().iter().enumerate() {
        for (k, q) in d2.cells().iter().enumerate() {
            if !commutes(p, q, tol)? {
                return Ok(CompatibilityReport::Incompatible { witness: (j, k) });
            }
        }
    }
    let cells = refine_cells(d1.cells(), d2.cells(), tol)?;
    Ok(CompatibilityReport::Compatible {
        refinement: DecompositionOfIdentity::new(cells, tol)?,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum FrameworkCheck {
    /// All properties commute; `framework` contains every one of them.
    Pass { framework: DecompositionOfIdentity },
    /// Every noncommuting pair of property indices.
    Violation { pairs: Vec<(usize, usize)> },
}

impl FrameworkCheck {
    pub fn passed(&self) -> bool {
        matches!(self, Self::Pass { .. })
    }
}

/// Whether a set of properties can belong to one framework.
pub fn single_framework_check(
    properties: &[ComplexMatrix],
    tol: Tolerance,
) -> Result<FrameworkCheck> {
    let first = properties.first().ok_or(Error::NoCells)?;
    for p in properties {
        if p.dim() != first.dim() {
            return Err(Error::DimensionMismatch {
                left: first.dim(),
                right: p.dim(),
            });
        }
    }
    let mut pairs = Vec::new();
    for i in 0..properties.len() {
        for j in (i + 1)..properties.len() {
            if !commutes(&properties[i], &properties[j], tol)? {
                pairs.push((i, j));
            }
        }
    }
    if !pairs.is_empty() {
        return Ok(FrameworkCheck::Violation { pairs });
    }
    let mut framework = DecompositionOfIdentity::trivial(first.dim(), tol);
    for (i, p) in properties.iter().enumerate() {
        let split =
            DecompositionOfIdentity::from_projector(p, tol).map_err(|_| Error::NotProjector(i))?;
        framework = match common_refinement(&framework, &split, tol)? {
            CompatibilityReport::Compatible { refinement } => refinement,
            CompatibilityReport::Incompatible { .. } => {
                unreachable!("pairwise commuting projectors generate commuting cells")
            }
        };
    }
    Ok(FrameworkCheck::Pass { framework })
}
