//! Finite classical phase spaces, indicator functions and coarse grainings.
//!
//! The phase space is an explicit finite point set, which makes "every
//! indicator" a finite collection and lets the point-based universal truth
//! functional be checked exhaustively.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::boolean::{self, AlgebraTables, TruthCensus, Valuation};
use crate::error::{Error, Result};
use crate::mask::{all_masks, CellMask};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhasePoint {
    pub x: f64,
    pub p: f64,
}

impl PhasePoint {
    pub fn new(x: f64, p: f64) -> Self {
        Self { x, p }
    }

    /// Oscillator energy with unit mass and frequency.
    pub fn energy(&self) -> f64 {
        self.x * self.x + self.p * self.p
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FinitePhaseSpace {
    points: Vec<PhasePoint>,
}

impl FinitePhaseSpace {
    pub fn new(points: Vec<PhasePoint>) -> Result<Arc<Self>> {
        if points.is_empty() {
            return Err(Error::EmptySpace);
        }
        let mut seen = HashMap::new();
        for (i, pt) in points.iter().enumerate() {
            if seen.insert((pt.x.to_bits(), pt.p.to_bits()), i).is_some() {
                return Err(Error::DuplicatePoint(i));
            }
        }
        Ok(Arc::new(Self { points }))
    }

    /// Rectangular `nx × np` grid with unit spacing, centred on the origin.
    pub fn grid(nx: usize, np: usize) -> Result<Arc<Self>> {
        let cx = (nx as f64 - 1.0) / 2.0;
        let cp = (np as f64 - 1.0) / 2.0;
        let points = (0..nx)
            .flat_map(|i| (0..np).map(move |j| PhasePoint::new(i as f64 - cx, j as f64 - cp)))
            .collect();
        Self::new(points)
    }

    pub fn points(&self) -> &[PhasePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of(&self, point: PhasePoint) -> Option<usize> {
        self.points.iter().position(|&q| q == point)
    }
}

fn same_space(a: &Arc<FinitePhaseSpace>, b: &Arc<FinitePhaseSpace>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// 0/1 function on a phase space.
#[derive(Debug, Clone)]
pub struct Indicator {
    space: Arc<FinitePhaseSpace>,
    values: Vec<bool>,
}

impl PartialEq for Indicator {
    fn eq(&self, other: &Self) -> bool {
        same_space(&self.space, &other.space) && self.values == other.values
    }
}

impl Indicator {
    pub fn new(space: &Arc<FinitePhaseSpace>, values: Vec<bool>) -> Result<Self> {
        if values.len() != space.len() {
            return Err(Error::DimensionMismatch {
                left: space.len(),
                right: values.len(),
            });
        }
        Ok(Self {
            space: Arc::clone(space),
            values,
        })
    }

    pub fn from_fn(space: &Arc<FinitePhaseSpace>, f: impl Fn(usize, &PhasePoint) -> bool) -> Self {
        Self {
            space: Arc::clone(space),
            values: space
                .points()
                .iter()
                .enumerate()
                .map(|(i, p)| f(i, p))
                .collect(),
        }
    }

    /// The constant function `I`.
    pub fn ones(space: &Arc<FinitePhaseSpace>) -> Self {
        Self::from_fn(space, |_, _| true)
    }

    pub fn zeros(space: &Arc<FinitePhaseSpace>) -> Self {
        Self::from_fn(space, |_, _| false)
    }

    /// Indicator of a set of point indices.
    pub fn from_indices(space: &Arc<FinitePhaseSpace>, indices: &[usize]) -> Result<Self> {
        let mut values = vec![false; space.len()];
        for &i in indices {
            if i >= space.len() {
                return Err(Error::PointIndexOutOfRange {
                    index: i,
                    len: space.len(),
                });
            }
            values[i] = true;
        }
        Ok(Self {
            space: Arc::clone(space),
            values,
        })
    }

    pub fn space(&self) -> &Arc<FinitePhaseSpace> {
        &self.space
    }

    pub fn value(&self, point: usize) -> u8 {
        u8::from(self.values[point])
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn is_empty(&self) -> bool {
        !self.values.iter().any(|&v| v)
    }

    fn check_space(&self, other: &Self) -> Result<()> {
        if same_space(&self.space, &other.space) {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    fn zip(&self, other: &Self, f: impl Fn(u8, u8) -> u8) -> Result<Self> {
        self.check_space(other)?;
        Ok(Self {
            space: Arc::clone(&self.space),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(u8::from(a), u8::from(b)) == 1)
                .collect(),
        })
    }
}

/// `I − P`.
pub fn indicator_not(p: &Indicator) -> Indicator {
    Indicator {
        space: Arc::clone(&p.space),
        values: p.values.iter().map(|&v| 1 - u8::from(v) == 1).collect(),
    }
}

/// `PQ`.
pub fn indicator_and(p: &Indicator, q: &Indicator) -> Result<Indicator> {
    p.zip(q, |a, b| a * b)
}

/// `P + Q − PQ`.
pub fn indicator_or(p: &Indicator, q: &Indicator) -> Result<Indicator> {
    p.zip(q, |a, b| a + b - a * b)
}

/// Points strictly inside the energy ellipse `x² + p² < E0`.
pub fn energy_ellipse_indicator(
    space: &Arc<FinitePhaseSpace>,
    threshold: f64,
) -> Result<Indicator> {
    if threshold.is_nan() || threshold <= 0.0 {
        return Err(Error::NonpositiveThreshold(threshold));
    }
    Ok(Indicator::from_fn(space, |_, pt| pt.energy() < threshold))
}

/// Partition of a phase space into nonempty, non-overlapping cells.
#[derive(Debug, Clone)]
pub struct CoarseGraining {
    space: Arc<FinitePhaseSpace>,
    cells: Vec<Indicator>,
}

impl CoarseGraining {
    pub fn new(space: &Arc<FinitePhaseSpace>, cells: Vec<Indicator>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::NoCells);
        }
        for cell in &cells {
            if !same_space(space, &cell.space) {
                return Err(Error::SpaceMismatch);
            }
        }
        for (j, cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(Error::EmptyCell(j));
            }
            for (k, other) in cells.iter().enumerate().skip(j + 1) {
                if !indicator_and(cell, other)?.is_empty() {
                    return Err(Error::CellsOverlap(j, k));
                }
            }
        }
        let covered = (0..space.len()).all(|i| cells.iter().any(|c| c.values[i]));
        if !covered {
            return Err(Error::Incomplete);
        }
        Ok(Self {
            space: Arc::clone(space),
            cells,
        })
    }

    /// Cells given as lists of point indices.
    pub fn from_partition(space: &Arc<FinitePhaseSpace>, cells: &[Vec<usize>]) -> Result<Self> {
        let cells = cells
            .iter()
            .map(|idx| Indicator::from_indices(space, idx))
            .collect::<Result<Vec<_>>>()?;
        Self::new(space, cells)
    }

    /// Cell label per point, e.g. from an energy-shell function.
    pub fn from_labels(space: &Arc<FinitePhaseSpace>, labels: &[usize]) -> Result<Self> {
        if labels.len() != space.len() {
            return Err(Error::DimensionMismatch {
                left: space.len(),
                right: labels.len(),
            });
        }
        let mut distinct: Vec<usize> = labels.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let cells = distinct
            .iter()
            .map(|&l| Indicator::from_fn(space, |i, _| labels[i] == l))
            .collect();
        Self::new(space, cells)
    }

    pub fn space(&self) -> &Arc<FinitePhaseSpace> {
        &self.space
    }

    pub fn cells(&self) -> &[Indicator] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Index of the cell containing a point.
    pub fn cell_of(&self, point: usize) -> Option<usize> {
        self.cells.iter().position(|c| c.values[point])
    }

    /// `Σ π_j D_j` pointwise.
    pub fn algebra_element(&self, mask: &CellMask) -> Result<Indicator> {
        mask.check_len(self.cells.len())?;
        let mut values = vec![false; self.space.len()];
        for j in mask.cells() {
            for (v, &c) in values.iter_mut().zip(&self.cells[j].values) {
                *v |= c;
            }
        }
        Ok(Indicator {
            space: Arc::clone(&self.space),
            values,
        })
    }

    /// Negation and conjunction tables, computed with real indicator operations.
    pub fn algebra_tables(&self) -> Result<AlgebraTables> {
        let n = self.len();
        if n > boolean::MAX_TABLE_CELLS {
            return Err(Error::TooLarge {
                cells: n,
                max: boolean::MAX_TABLE_CELLS,
            });
        }
        let elements = all_masks(n)
            .map(|m| self.algebra_element(&m))
            .collect::<Result<Vec<_>>>()?;
        let index: HashMap<Vec<bool>, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.values.clone(), i))
            .collect();
        AlgebraTables::build(
            n,
            &elements,
            indicator_not,
            |a, b| indicator_and(a, b).expect("same space"),
            |e| index.get(&e.values).copied(),
        )
    }
}

/// `θ_k(P)`: 1 if `P·D_k = D_k`, 0 if `P·D_k = 0`.
pub fn classical_truth_eval(graining: &CoarseGraining, k: usize, p: &Indicator) -> Result<u8> {
    let n = graining.len();
    if k >= n {
        return Err(Error::CellIndexOutOfRange { index: k, cells: n });
    }
    if !same_space(&graining.space, &p.space) {
        return Err(Error::SpaceMismatch);
    }
    // P must not cut any cell, not just D_k.
    let mut result = None;
    for (j, cell) in graining.cells.iter().enumerate() {
        let pd = indicator_and(p, cell)?;
        let value = if pd == *cell {
            1
        } else if pd.is_empty() {
            0
        } else {
            return Err(Error::NotInAlgebra { cell: j });
        };
        if j == k {
            result = Some(value);
        }
    }
    Ok(result.expect("k < n"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationMode {
    /// Filter all `2^(2^N)` candidate maps (N ≤ 4).
    Exhaustive,
    /// Build the N functionals `θ_k` directly.
    Constructive,
}

/// Valuation table of `θ_k` over every algebra element, via [`classical_truth_eval`].
pub fn constructive_valuation(graining: &CoarseGraining, k: usize) -> Result<Valuation> {
    let values = all_masks(graining.len())
        .map(|m| classical_truth_eval(graining, k, &graining.algebra_element(&m)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(Valuation::new(values))
}

/// Truth functionals on the algebra of a coarse graining.
///
/// In exhaustive mode the census also reports how many candidates were scanned;
/// in constructive mode `candidates_checked` is 0.
pub fn enumerate_truth_functionals(
    graining: &CoarseGraining,
    mode: EnumerationMode,
) -> Result<TruthCensus> {
    match mode {
        EnumerationMode::Exhaustive => {
            if graining.len() > boolean::MAX_EXHAUSTIVE_CELLS {
                return Err(Error::TooLarge {
                    cells: graining.len(),
                    max: boolean::MAX_EXHAUSTIVE_CELLS,
                });
            }
            boolean::exhaustive_truth_functionals(&graining.algebra_tables()?)
        }
        EnumerationMode::Constructive => Ok(TruthCensus {
            candidates_checked: 0,
            survivors: (0..graining.len())
                .map(|k| constructive_valuation(graining, k))
                .collect::<Result<_>>()?,
        }),
    }
}

/// `θ0(P) = P(γ0)`, defined on every indicator of the space.
#[derive(Debug, Clone)]
pub struct UniversalTruthFunctional {
    space: Arc<FinitePhaseSpace>,
    point: usize,
}

impl UniversalTruthFunctional {
    pub fn point_index(&self) -> usize {
        self.point
    }

    pub fn eval(&self, p: &Indicator) -> Result<u8> {
        if !same_space(&self.space, &p.space) {
            return Err(Error::SpaceMismatch);
        }
        Ok(p.value(self.point))
    }
}

pub fn universal_truth_functional(
    space: &Arc<FinitePhaseSpace>,
    gamma0: PhasePoint,
) -> Result<UniversalTruthFunctional> {
    let point = space.index_of(gamma0).ok_or(Error::PointNotInSpace)?;
    Ok(UniversalTruthFunctional {
        space: Arc::clone(space),
        point,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(n: usize) -> Arc<FinitePhaseSpace> {
        FinitePhaseSpace::grid(n, 1).unwrap()
    }

    #[test]
    fn negation_and_idempotence() {
        let s = line(5);
        let ones = Indicator::ones(&s);
        assert_eq!(indicator_not(&ones), Indicator::zeros(&s));
        let p = Indicator::from_indices(&s, &[0, 3]).unwrap();
        assert_eq!(indicator_and(&p, &p).unwrap(), p);
        assert_eq!(indicator_or(&p, &indicator_not(&p)).unwrap(), ones);
    }

    #[test]
    fn space_mismatch() {
        let a = line(3);
        let b = line(4);
        assert_eq!(
            indicator_and(&Indicator::ones(&a), &Indicator::ones(&b)).unwrap_err(),
            Error::SpaceMismatch
        );
    }

    #[test]
    fn rejects_bad_spaces() {
        assert_eq!(
            FinitePhaseSpace::new(vec![]).unwrap_err(),
            Error::EmptySpace
        );
        let p = PhasePoint::new(1.0, 2.0);
        assert_eq!(
            FinitePhaseSpace::new(vec![p, PhasePoint::new(0.0, 0.0), p]).unwrap_err(),
            Error::DuplicatePoint(2)
        );
    }

    #[test]
    fn ellipse() {
        let s = FinitePhaseSpace::new(vec![PhasePoint::new(0.0, 0.0), PhasePoint::new(2.0, 0.0)])
            .unwrap();
        let e = energy_ellipse_indicator(&s, 1.0).unwrap();
        assert_eq!(e.value(0), 1);
        assert_eq!(e.value(1), 0);
        assert_eq!(energy_ellipse_indicator(&s, 1e-300).unwrap().value(0), 1);
        let grid = FinitePhaseSpace::grid(7, 7).unwrap();
        assert_eq!(
            energy_ellipse_indicator(&grid, 1e12).unwrap(),
            Indicator::ones(&grid)
        );
        assert_eq!(
            energy_ellipse_indicator(&s, 0.0).unwrap_err(),
            Error::NonpositiveThreshold(0.0)
        );
        assert!(energy_ellipse_indicator(&s, f64::NAN).is_err());
    }

    #[test]
    fn coarse_graining_validation() {
        let s = line(4);
        assert_eq!(
            CoarseGraining::from_partition(&s, &[vec![0, 1], vec![1, 2, 3]]).unwrap_err(),
            Error::CellsOverlap(0, 1)
        );
        assert_eq!(
            CoarseGraining::from_partition(&s, &[vec![0, 1], vec![2]]).unwrap_err(),
            Error::Incomplete
        );
        assert_eq!(
            CoarseGraining::from_partition(&s, &[vec![0, 1, 2, 3], vec![]]).unwrap_err(),
            Error::EmptyCell(1)
        );
    }

    #[test]
    fn algebra_elements() {
        let s = line(6);
        let g = CoarseGraining::from_partition(&s, &[vec![0, 1], vec![2], vec![3, 4, 5]]).unwrap();
        assert_eq!(
            g.algebra_element(&CellMask::empty(3)).unwrap(),
            Indicator::zeros(&s)
        );
        assert_eq!(
            g.algebra_element(&CellMask::full(3)).unwrap(),
            Indicator::ones(&s)
        );
        assert_eq!(
            g.algebra_element(&CellMask::single(3, 2)).unwrap(),
            g.cells()[2]
        );
        assert_eq!(
            g.algebra_element(&CellMask::empty(2)).unwrap_err(),
            Error::MaskLengthMismatch {
                expected: 3,
                found: 2
            }
        );
    }

    #[test]
    fn truth_eval_cases() {
        let s = line(6);
        let g = CoarseGraining::from_partition(&s, &[vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        assert_eq!(classical_truth_eval(&g, 1, &g.cells()[1]).unwrap(), 1);
        assert_eq!(classical_truth_eval(&g, 0, &g.cells()[1]).unwrap(), 0);
        assert_eq!(
            classical_truth_eval(&g, 2, &Indicator::ones(&s)).unwrap(),
            1
        );
        let half = Indicator::from_indices(&s, &[2]).unwrap();
        assert_eq!(
            classical_truth_eval(&g, 1, &half).unwrap_err(),
            Error::NotInAlgebra { cell: 1 }
        );
        // Cutting a different cell is still outside the algebra.
        assert_eq!(
            classical_truth_eval(&g, 0, &half).unwrap_err(),
            Error::NotInAlgebra { cell: 1 }
        );
    }

    #[test]
    fn enumeration_small_cases() {
        let s = line(4);
        let one = CoarseGraining::from_partition(&s, &[vec![0, 1, 2, 3]]).unwrap();
        let census = enumerate_truth_functionals(&one, EnumerationMode::Exhaustive).unwrap();
        assert_eq!(census.survivors.len(), 1);
        assert_eq!(census.candidates_checked, 4);

        let two = CoarseGraining::from_partition(&s, &[vec![0, 3], vec![1, 2]]).unwrap();
        let census = enumerate_truth_functionals(&two, EnumerationMode::Exhaustive).unwrap();
        assert_eq!(census.candidates_checked, 16);
        assert_eq!(census.survivors.len(), 2);

        let three = CoarseGraining::from_partition(&s, &[vec![0], vec![1, 2], vec![3]]).unwrap();
        let census = enumerate_truth_functionals(&three, EnumerationMode::Exhaustive).unwrap();
        assert_eq!(census.candidates_checked, 256);
        let constructive =
            enumerate_truth_functionals(&three, EnumerationMode::Constructive).unwrap();
        let mut a = census.survivors.clone();
        let mut b = constructive.survivors.clone();
        a.sort();
        b.sort();
        assert_eq!(a, b);

        let five = CoarseGraining::from_partition(
            &line(5),
            &[vec![0], vec![1], vec![2], vec![3], vec![4]],
        )
        .unwrap();
        assert_eq!(
            enumerate_truth_functionals(&five, EnumerationMode::Exhaustive).unwrap_err(),
            Error::TooLarge { cells: 5, max: 4 }
        );
        assert_eq!(
            enumerate_truth_functionals(&five, EnumerationMode::Constructive)
                .unwrap()
                .survivors
                .len(),
            5
        );
    }

    #[test]
    fn universal_functional_basics() {
        let s = FinitePhaseSpace::grid(3, 3).unwrap();
        let theta = universal_truth_functional(&s, PhasePoint::new(0.0, 0.0)).unwrap();
        assert_eq!(theta.eval(&Indicator::ones(&s)).unwrap(), 1);
        let p = energy_ellipse_indicator(&s, 0.5).unwrap();
        assert_eq!(
            theta.eval(&p).unwrap() + theta.eval(&indicator_not(&p)).unwrap(),
            1
        );
        assert_eq!(
            universal_truth_functional(&s, PhasePoint::new(0.5, 0.0)).unwrap_err(),
            Error::PointNotInSpace
        );
    }
}
