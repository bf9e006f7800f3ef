//! Search for a universal truth functional over a collection of frameworks.
//!
//! One truth functional is chosen per framework (a cell `k_i`), and every
//! projector that lies in several frameworks' algebras must receive the same
//! truth value in each of them. Variables are the frameworks in input order,
//! values the cells in canonical order; all solutions are enumerated.

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, Tolerance};
use crate::mask::{all_masks, CellMask};
use crate::quantum::{joint_decomposition, DecompositionOfIdentity};

use super::square::MerminSquare;

/// Cell limit per framework for shared-projector detection.
pub const MAX_SHARED_CELLS: usize = 6;

/// A projector occurring in the algebras of at least two frameworks.
#[derive(Debug, Clone, PartialEq)]
pub struct SharedProjector {
    pub id: usize,
    pub projector: ComplexMatrix,
    /// `(framework, mask)` for each framework whose algebra contains it.
    pub members: Vec<(usize, CellMask)>,
}

#[derive(Debug, Clone)]
pub struct FrameworkCollection {
    dim: usize,
    frameworks: Vec<DecompositionOfIdentity>,
    shared: Vec<SharedProjector>,
}

impl FrameworkCollection {
    pub fn new(frameworks: Vec<DecompositionOfIdentity>, tol: Tolerance) -> Result<Self> {
        let dim = frameworks.first().ok_or(Error::NoCells)?.dim();
        for f in &frameworks {
            if f.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: f.dim(),
                });
            }
            if f.len() > MAX_SHARED_CELLS {
                return Err(Error::TooLarge {
                    cells: f.len(),
                    max: MAX_SHARED_CELLS,
                });
            }
        }

        // Group every algebra element by its first-seen representative, so
        // equality classes are transitive by construction.
        let mut classes: Vec<(ComplexMatrix, Vec<(usize, CellMask)>)> = Vec::new();
        for (fi, f) in frameworks.iter().enumerate() {
            let elem_tol = tol.scaled(f.len() as f64);
            for mask in all_masks(f.len()) {
                let e = f.element(&mask)?;
                match classes
                    .iter_mut()
                    .find(|(rep, _)| rep.approx_eq(&e, elem_tol))
                {
                    Some((_, members)) => members.push((fi, mask)),
                    None => classes.push((e, vec![(fi, mask)])),
                }
            }
        }
        let shared = classes
            .into_iter()
            .filter(|(_, members)| members.iter().any(|(f, _)| *f != members[0].0))
            .enumerate()
            .map(|(id, (projector, members))| SharedProjector {
                id,
                projector,
                members,
            })
            .collect();
        Ok(Self {
            dim,
            frameworks,
            shared,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn frameworks(&self) -> &[DecompositionOfIdentity] {
        &self.frameworks
    }

    pub fn shared(&self) -> &[SharedProjector] {
        &self.shared
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conflict {
    pub framework: usize,
    pub cell: usize,
    pub clashing_projector_ids: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SearchTrace {
    /// `(framework, cell)` assignments attempted.
    pub nodes: u64,
    /// Rejected assignments, in visit order.
    pub conflicts: Vec<Conflict>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UtfOutcome {
    /// Every consistent choice of one cell per framework.
    Sat {
        solutions: Vec<Vec<usize>>,
        trace: SearchTrace,
    },
    Unsat {
        trace: SearchTrace,
    },
}

impl UtfOutcome {
    pub fn is_sat(&self) -> bool {
        matches!(self, Self::Sat { .. })
    }

    pub fn trace(&self) -> &SearchTrace {
        match self {
            Self::Sat { trace, .. } | Self::Unsat { trace } => trace,
        }
    }

    pub fn solutions(&self) -> &[Vec<usize>] {
        match self {
            Self::Sat { solutions, .. } => solutions,
            Self::Unsat { .. } => &[],
        }
    }
}

/// For one framework: each shared projector it holds, with its mask here and
/// its masks in earlier frameworks.
type Links = Vec<(usize, CellMask, Vec<(usize, CellMask)>)>;

struct Search {
    links: Vec<Links>,
    sizes: Vec<usize>,
    choice: Vec<usize>,
    trace: SearchTrace,
    solutions: Vec<Vec<usize>>,
}

impl Search {
    fn clashes(&self, fi: usize, cell: usize) -> Vec<usize> {
        let mut ids: Vec<usize> = self.links[fi]
            .iter()
            .filter(|(_, here, earlier)| {
                let value = here.contains(cell);
                earlier
                    .iter()
                    .any(|(fj, mask)| mask.contains(self.choice[*fj]) != value)
            })
            .map(|(id, _, _)| *id)
            .collect();
        ids.dedup();
        ids
    }

    fn descend(&mut self, fi: usize) {
        if fi == self.sizes.len() {
            self.solutions.push(self.choice.clone());
            return;
        }
        for cell in 0..self.sizes[fi] {
            self.trace.nodes += 1;
            let clashing = self.clashes(fi, cell);
            if !clashing.is_empty() {
                self.trace.conflicts.push(Conflict {
                    framework: fi,
                    cell,
                    clashing_projector_ids: clashing,
                });
                continue;
            }
            self.choice[fi] = cell;
            self.descend(fi + 1);
        }
    }
}

/// Backtracking search for one truth functional per framework agreeing on
/// every shared projector.
pub fn utf_search(fc: &FrameworkCollection) -> UtfOutcome {
    let n = fc.frameworks.len();
    let mut links: Vec<Links> = vec![Vec::new(); n];
    for sp in &fc.shared {
        for (pos, (fi, mask)) in sp.members.iter().enumerate() {
            let earlier: Vec<_> = sp.members[..pos]
                .iter()
                .filter(|(fj, _)| fj < fi)
                .cloned()
                .collect();
            if !earlier.is_empty() {
                links[*fi].push((sp.id, mask.clone(), earlier));
            }
        }
    }
    let mut search = Search {
        links,
        sizes: fc.frameworks.iter().map(|f| f.len()).collect(),
        choice: vec![0; n],
        trace: SearchTrace::default(),
        solutions: Vec::new(),
    };
    search.descend(0);
    if search.solutions.is_empty() {
        UtfOutcome::Unsat {
            trace: search.trace,
        }
    } else {
        UtfOutcome::Sat {
            solutions: search.solutions,
            trace: search.trace,
        }
    }
}

/// Joint decompositions of rows 1–3 then columns 1–3.
pub fn square_frameworks(
    sq: &MerminSquare,
    tol: Tolerance,
) -> Result<Vec<DecompositionOfIdentity>> {
    (0..3)
        .map(|r| joint_decomposition(&sq.complex_row(r), tol))
        .chain((0..3).map(|c| joint_decomposition(&sq.complex_column(c), tol)))
        .collect()
}
