//! JSON encodings shared by the CLI and test fixtures.
//!
//! Matrices are `{"dim": n, "entries": [[[re, im], ...], ...]}` (row-major);
//! decompositions `{"dim": n, "cells": [matrix, ...]}`. Emitted floats are
//! rounded to 12 significant digits so output is byte-stable.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::classical::{FinitePhaseSpace, PhasePoint};
use crate::compat::CompatibilityReport;
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, Tolerance};
use crate::nogo::{SearchTrace, SignAssignment};
use crate::quantum::DecompositionOfIdentity;

/// Rounds to 12 significant digits; `-0.0` becomes `0.0`.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return 0.0;
    }
    let r: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Matrix entries below this magnitude are written as exact zeros.
pub const ENTRY_FLOOR: f64 = 1e-12;

fn entry(x: f64) -> f64 {
    if x.abs() < ENTRY_FLOOR {
        0.0
    } else {
        round_sig(x)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    pub dim: usize,
    pub entries: Vec<Vec<[f64; 2]>>,
}

impl MatrixJson {
    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        if self.entries.len() != self.dim {
            return Err(Error::Format(format!(
                "dim is {} but {} rows given",
                self.dim,
                self.entries.len()
            )));
        }
        ComplexMatrix::from_rows(
            self.entries
                .iter()
                .map(|row| row.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
                .collect(),
        )
    }
}

impl From<&ComplexMatrix> for MatrixJson {
    fn from(m: &ComplexMatrix) -> Self {
        Self {
            dim: m.dim(),
            entries: m
                .rows()
                .map(|row| row.iter().map(|z| [entry(z.re), entry(z.im)]).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub dim: usize,
    pub cells: Vec<MatrixJson>,
}

impl DecompositionJson {
    pub fn to_decomposition(&self, tol: Tolerance) -> Result<DecompositionOfIdentity> {
        let cells = self
            .cells
            .iter()
            .map(MatrixJson::to_matrix)
            .collect::<Result<Vec<_>>>()?;
        if let Some(c) = cells.iter().find(|c| c.dim() != self.dim) {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: c.dim(),
            });
        }
        DecompositionOfIdentity::new(cells, tol)
    }
}

impl From<&DecompositionOfIdentity> for DecompositionJson {
    fn from(d: &DecompositionOfIdentity) -> Self {
        Self {
            dim: d.dim(),
            cells: d.cells().iter().map(MatrixJson::from).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ObservableJson {
    pub matrix: MatrixJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CollectionJson {
    pub dim: usize,
    pub frameworks: Vec<DecompositionJson>,
}

impl CollectionJson {
    pub fn to_frameworks(&self, tol: Tolerance) -> Result<Vec<DecompositionOfIdentity>> {
        let frameworks = self
            .frameworks
            .iter()
            .map(|d| d.to_decomposition(tol))
            .collect::<Result<Vec<_>>>()?;
        if let Some(f) = frameworks.iter().find(|f| f.dim() != self.dim) {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: f.dim(),
            });
        }
        Ok(frameworks)
    }

    pub fn from_frameworks(frameworks: &[DecompositionOfIdentity]) -> Self {
        Self {
            dim: frameworks.first().map_or(0, |f| f.dim()),
            frameworks: frameworks.iter().map(DecompositionJson::from).collect(),
        }
    }
}

/// Two properties: `{"p": matrix, "q": matrix}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairJson {
    pub p: MatrixJson,
    pub q: MatrixJson,
}

/// `{"projectors": [matrix, ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PropertiesJson {
    pub projectors: Vec<MatrixJson>,
}

/// `{"values": [[±1, ±1, ±1], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AssignmentJson {
    pub values: [[i8; 3]; 3],
}

impl AssignmentJson {
    pub fn to_assignment(&self) -> Result<SignAssignment> {
        SignAssignment::new(self.values)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PhaseSpaceJson {
    pub points: Vec<[f64; 2]>,
}

impl PhaseSpaceJson {
    pub fn to_space(&self) -> Result<std::sync::Arc<FinitePhaseSpace>> {
        FinitePhaseSpace::new(
            self.points
                .iter()
                .map(|&[x, p]| PhasePoint::new(x, p))
                .collect(),
        )
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PartitionJson {
    pub cells: Vec<Vec<usize>>,
}

pub fn compatibility_json(report: &CompatibilityReport) -> Value {
    json!({
        "compatible": report.is_compatible(),
        "witness": report.witness().map(|(j, k)| vec![j, k]),
        "refinement": report.refinement().map(DecompositionJson::from),
    })
}

pub fn trace_json(trace: &SearchTrace) -> Value {
    json!({
        "nodes": trace.nodes,
        "conflicts": trace.conflicts.iter().map(|c| json!({
            "framework": c.framework,
            "cell": c.cell,
            "clashing_projector_ids": c.clashing_projector_ids,
        })).collect::<Vec<_>>(),
    })
}

pub fn parse<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::pauli;

    #[test]
    fn rounding() {
        assert_eq!(round_sig(-0.0).to_bits(), 0.0f64.to_bits());
        assert_eq!(round_sig(0.1 + 0.2), 0.3);
        assert_eq!(round_sig(1.0 - 1e-15), 1.0);
        assert_eq!(round_sig(1e-17), 1e-17);
    }

    #[test]
    fn matrix_round_trip() {
        let m = pauli::y().kron(&pauli::x());
        let text = serde_json::to_string(&MatrixJson::from(&m)).unwrap();
        let back: MatrixJson = parse(&text).unwrap();
        assert_eq!(back.to_matrix().unwrap(), m);
    }

    #[test]
    fn rejects_inconsistent_dim() {
        let bad: MatrixJson = parse(r#"{"dim": 3, "entries": [[[1,0]]]}"#).unwrap();
        assert!(matches!(bad.to_matrix(), Err(Error::Format(_))));
        assert!(parse::<MatrixJson>("{").is_err());
    }
}
