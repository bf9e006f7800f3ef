//! Finite Boolean algebras given by operation tables, and the truth rules
//!
//! ```text
//! θ(I) = 1,   θ(I − P) = 1 − θ(P),   θ(PQ) = θ(P)·θ(Q)
//! ```
//!
//! Tables are computed from the concrete objects (indicators or projectors),
//! so filtering candidate valuations against them tests the real operations
//! rather than bit arithmetic on masks.

use crate::error::{Error, Result};

/// Largest cell count for which all `2^(2^N)` candidate valuations are scanned.
pub const MAX_EXHAUSTIVE_CELLS: usize = 4;

/// Largest cell count for which full `2^N × 2^N` tables are materialized.
pub const MAX_TABLE_CELLS: usize = 8;

/// Negation and conjunction tables over the `2^N` elements of an algebra,
/// indexed by mask index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraTables {
    cells: usize,
    complement: Vec<usize>,
    meet: Vec<usize>,
}

impl AlgebraTables {
    /// Builds the tables by applying `complement` and `meet` to every element
    /// and locating the result among `elements` with `locate`.
    pub fn build<E>(
        cells: usize,
        elements: &[E],
        complement: impl Fn(&E) -> E,
        meet: impl Fn(&E, &E) -> E,
        locate: impl Fn(&E) -> Option<usize>,
    ) -> Result<Self> {
        let size = 1usize << cells;
        assert_eq!(elements.len(), size, "one element per mask");
        let not_closed = || Error::ConstructionFailure("algebra is not closed".into());
        let complement = elements
            .iter()
            .map(|e| locate(&complement(e)).ok_or_else(not_closed))
            .collect::<Result<Vec<_>>>()?;
        let mut table = Vec::with_capacity(size * size);
        for a in elements {
            for b in elements {
                table.push(locate(&meet(a, b)).ok_or_else(not_closed)?);
            }
        }
        Ok(Self {
            cells,
            complement,
            meet: table,
        })
    }

    pub fn cells(&self) -> usize {
        self.cells
    }

    pub fn size(&self) -> usize {
        1 << self.cells
    }

    pub fn identity(&self) -> usize {
        self.size() - 1
    }

    pub fn complement(&self, e: usize) -> usize {
        self.complement[e]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size() + b]
    }

    /// Checks all three truth rules for a 0/1 valuation.
    pub fn satisfies_truth_rules(&self, value: impl Fn(usize) -> u8) -> bool {
        let n = self.size();
        if value(self.identity()) != 1 {
            return false;
        }
        for p in 0..n {
            if value(self.complement(p)) != 1 - value(p) {
                return false;
            }
        }
        for p in 0..n {
            for q in 0..n {
                if value(self.meet(p, q)) != value(p) * value(q) {
                    return false;
                }
            }
        }
        true
    }
}

/// 0/1 values over all algebra elements, indexed by mask index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Valuation {
    values: Vec<u8>,
}

impl Valuation {
    pub fn new(values: Vec<u8>) -> Self {
        debug_assert!(values.iter().all(|&v| v <= 1));
        Self { values }
    }

    pub fn value(&self, element: usize) -> u8 {
        self.values[element]
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// The unique single cell valued 1, if exactly one is.
    pub fn selected_cell(&self) -> Option<usize> {
        let cells = self.values.len().trailing_zeros() as usize;
        let mut hits = (0..cells).filter(|&j| self.values[1 << j] == 1);
        match (hits.next(), hits.next()) {
            (Some(k), None) => Some(k),
            _ => None,
        }
    }

    /// Table as a bit string, element 0 first.
    pub fn to_bit_string(&self) -> String {
        self.values.iter().map(|&v| char::from(b'0' + v)).collect()
    }
}

/// Result of scanning every candidate 0/1 map on an algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthCensus {
    pub candidates_checked: u64,
    pub survivors: Vec<Valuation>,
}

/// Enumerates all `2^(2^N)` maps from algebra elements to {0,1} and keeps
/// those obeying the truth rules.
pub fn exhaustive_truth_functionals(tables: &AlgebraTables) -> Result<TruthCensus> {
    if tables.cells() > MAX_EXHAUSTIVE_CELLS {
        return Err(Error::TooLarge {
            cells: tables.cells(),
            max: MAX_EXHAUSTIVE_CELLS,
        });
    }
    let size = tables.size();
    let candidates = 1u64 << size;
    let survivors = (0..candidates)
        .filter(|&c| tables.satisfies_truth_rules(|e| (c >> e & 1) as u8))
        .map(|c| Valuation::new((0..size).map(|e| (c >> e & 1) as u8).collect()))
        .collect();
    Ok(TruthCensus {
        candidates_checked: candidates,
        survivors,
    })
}
