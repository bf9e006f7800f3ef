use crate::boolean::{self, AlgebraTables, TruthCensus, Valuation};
use crate::classical::EnumerationMode;
use crate::error::{Error, Result};
use crate::linalg::{commutes, ComplexMatrix, Tolerance};
use crate::mask::{all_masks, CellMask};

/// Mutually orthogonal projectors summing to the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionOfIdentity {
    dim: usize,
    cells: Vec<ComplexMatrix>,
    tol: Tolerance,
}

impl DecompositionOfIdentity {
    /// Validates idempotence, Hermiticity, orthogonality, completeness and
    /// that no cell is zero.
    pub fn new(cells: Vec<ComplexMatrix>, tol: Tolerance) -> Result<Self> {
        let dim = cells.first().ok_or(Error::NoCells)?.dim();
        for (j, cell) in cells.iter().enumerate() {
            if cell.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: cell.dim(),
                });
            }
            if !cell.is_projector(tol) {
                return Err(Error::NotProjector(j));
            }
            if cell.is_zero(tol) {
                return Err(Error::EmptyCell(j));
            }
        }
        for j in 0..cells.len() {
            for k in (j + 1)..cells.len() {
                if !cells[j].mul(&cells[k])?.is_zero(tol) {
                    return Err(Error::CellsOverlap(j, k));
                }
            }
        }
        let mut sum = ComplexMatrix::zeros(dim);
        for cell in &cells {
            sum = sum.add(cell)?;
        }
        if !sum.approx_eq(&ComplexMatrix::identity(dim), tol) {
            return Err(Error::Incomplete);
        }
        Ok(Self { dim, cells, tol })
    }

    /// The trivial decomposition `{I}`.
    pub fn trivial(dim: usize, tol: Tolerance) -> Self {
        Self {
            dim,
            cells: vec![ComplexMatrix::identity(dim)],
            tol,
        }
    }

    /// `{P, I − P}`, dropping whichever part is zero.
    pub fn from_projector(p: &ComplexMatrix, tol: Tolerance) -> Result<Self> {
        if !p.is_projector(tol) {
            return Err(Error::NotProjector(0));
        }
        let rest = ComplexMatrix::identity(p.dim()).sub(p)?;
        let cells = [p.clone(), rest]
            .into_iter()
            .filter(|c| !c.is_zero(tol))
            .collect();
        Self::new(cells, tol)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[ComplexMatrix] {
        &self.cells
    }

    pub fn cell(&self, j: usize) -> &ComplexMatrix {
        &self.cells[j]
    }

    pub fn tolerance(&self) -> Tolerance {
        self.tol
    }

    /// `Σ π_j D_j`, materialized on demand.
    pub fn element(&self, mask: &CellMask) -> Result<ComplexMatrix> {
        mask.check_len(self.len())?;
        let mut sum = ComplexMatrix::zeros(self.dim);
        for j in mask.cells() {
            sum = sum.add(&self.cells[j])?;
        }
        Ok(sum)
    }

    /// Finds the algebra element equal to `p` within tolerance, if any.
    ///
    /// `P` is in the algebra iff `P·D_j` is `D_j` or `0` for every cell.
    pub fn locate(&self, p: &ComplexMatrix) -> Result<Option<CellMask>> {
        let mut bits = Vec::with_capacity(self.len());
        for cell in &self.cells {
            let pd = p.mul(cell)?;
            if pd.approx_eq(cell, self.tol) {
                bits.push(true);
            } else if pd.is_zero(self.tol) {
                bits.push(false);
            } else {
                return Ok(None);
            }
        }
        let mask = CellMask::new(bits);
        Ok(self.element(&mask)?.approx_eq(p, self.tol).then_some(mask))
    }

    /// Truth functional selecting cell `k` (0-based).
    pub fn truth_functional(&self, k: usize) -> Result<QuantumTruthFunctional<'_>> {
        if k >= self.len() {
            return Err(Error::CellIndexOutOfRange {
                index: k,
                cells: self.len(),
            });
        }
        Ok(QuantumTruthFunctional {
            decomposition: self,
            k,
        })
    }

    pub fn truth_functionals(&self) -> impl Iterator<Item = QuantumTruthFunctional<'_>> {
        (0..self.len()).map(move |k| QuantumTruthFunctional {
            decomposition: self,
            k,
        })
    }

    /// Negation/conjunction tables from matrix arithmetic on the `2^N` elements.
    pub fn algebra_tables(&self) -> Result<AlgebraTables> {
        let n = self.len();
        if n > boolean::MAX_TABLE_CELLS {
            return Err(Error::TooLarge {
                cells: n,
                max: boolean::MAX_TABLE_CELLS,
            });
        }
        let elements = all_masks(n)
            .map(|m| self.element(&m))
            .collect::<Result<Vec<_>>>()?;
        let identity = ComplexMatrix::identity(self.dim);
        // Products of sums of cells accumulate error; compare at a looser scale.
        let tol = self.tol.scaled(n as f64 * n as f64);
        AlgebraTables::build(
            n,
            &elements,
            |p| identity.sub(p).expect("same dimension"),
            |p, q| p.mul(q).expect("same dimension"),
            |x| elements.iter().position(|e| e.approx_eq(x, tol)),
        )
    }
}

/// `θ_k` on the algebra of one decomposition.
#[derive(Debug, Clone, Copy)]
pub struct QuantumTruthFunctional<'a> {
    decomposition: &'a DecompositionOfIdentity,
    k: usize,
}

impl<'a> QuantumTruthFunctional<'a> {
    pub fn decomposition(&self) -> &'a DecompositionOfIdentity {
        self.decomposition
    }

    pub fn cell(&self) -> usize {
        self.k
    }

    /// 1 if `P·D_k = D_k`, 0 if `P·D_k = 0`.
    ///
    /// `P` must commute with every cell and must not split any of them.
    pub fn eval(&self, p: &ComplexMatrix) -> Result<u8> {
        let d = self.decomposition;
        let tol = d.tol;
        for (j, cell) in d.cells.iter().enumerate() {
            if !commutes(p, cell, tol)? {
                return Err(Error::NoncommutingProjector { cell: j });
            }
        }
        let mut result = None;
        for (j, cell) in d.cells.iter().enumerate() {
            let pd = p.mul(cell)?;
            let value = if pd.approx_eq(cell, tol) {
                1
            } else if pd.is_zero(tol) {
                0
            } else {
                return Err(Error::NotInAlgebra { cell: j });
            };
            if j == self.k {
                result = Some(value);
            }
        }
        Ok(result.expect("k < N"))
    }
}

pub fn quantum_truth_eval(theta: &QuantumTruthFunctional<'_>, p: &ComplexMatrix) -> Result<u8> {
    theta.eval(p)
}

/// Valuation table of `θ_k` obtained by evaluating it on every element.
pub fn constructive_valuation(d: &DecompositionOfIdentity, k: usize) -> Result<Valuation> {
    let theta = d.truth_functional(k)?;
    let values = all_masks(d.len())
        .map(|m| theta.eval(&d.element(&m)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(Valuation::new(values))
}

pub fn enumerate_truth_functionals(
    d: &DecompositionOfIdentity,
    mode: EnumerationMode,
) -> Result<TruthCensus> {
    match mode {
        EnumerationMode::Exhaustive => {
            if d.len() > boolean::MAX_EXHAUSTIVE_CELLS {
                return Err(Error::TooLarge {
                    cells: d.len(),
                    max: boolean::MAX_EXHAUSTIVE_CELLS,
                });
            }
            boolean::exhaustive_truth_functionals(&d.algebra_tables()?)
        }
        EnumerationMode::Constructive => Ok(TruthCensus {
            candidates_checked: 0,
            survivors: (0..d.len())
                .map(|k| constructive_valuation(d, k))
                .collect::<Result<_>>()?,
        }),
    }
}
