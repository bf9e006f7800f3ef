use std::fmt;

use crate::error::{Error, Result};

/// Selects a subset of cells `π_j ∈ {0,1}`: the element `Σ π_j D_j` of a
/// decomposition's Boolean algebra.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellMask {
    bits: Vec<bool>,
}

impl CellMask {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    pub fn empty(len: usize) -> Self {
        Self {
            bits: vec![false; len],
        }
    }

    pub fn full(len: usize) -> Self {
        Self {
            bits: vec![true; len],
        }
    }

    pub fn single(len: usize, cell: usize) -> Self {
        let mut m = Self::empty(len);
        m.bits[cell] = true;
        m
    }

    /// Mask whose bit `j` is bit `j` of `index`. `len` must be at most 64.
    pub fn from_index(index: u64, len: usize) -> Self {
        assert!(len <= 64, "index masks support at most 64 cells");
        Self {
            bits: (0..len).map(|j| index >> j & 1 == 1).collect(),
        }
    }

    /// Inverse of [`CellMask::from_index`]; `None` beyond 64 cells.
    pub fn to_index(&self) -> Option<u64> {
        if self.bits.len() > 64 {
            return None;
        }
        Some(
            self.bits
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .fold(0u64, |acc, (j, _)| acc | 1 << j),
        )
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn contains(&self, cell: usize) -> bool {
        self.bits[cell]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn cells(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(j, _)| j)
    }

    pub fn complement(&self) -> Self {
        Self {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    pub(crate) fn check_len(&self, expected: usize) -> Result<()> {
        if self.bits.len() == expected {
            Ok(())
        } else {
            Err(Error::MaskLengthMismatch {
                expected,
                found: self.bits.len(),
            })
        }
    }
}

impl fmt::Debug for CellMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .bits
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect();
        write!(f, "CellMask({s})")
    }
}

/// All `2^len` masks in index order.
pub fn all_masks(len: usize) -> impl Iterator<Item = CellMask> {
    assert!(len < 64, "too many cells to enumerate");
    (0..1u64 << len).map(move |i| CellMask::from_index(i, len))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_round_trip() {
        for i in 0..32 {
            assert_eq!(CellMask::from_index(i, 5).to_index(), Some(i));
        }
        assert_eq!(CellMask::empty(70).to_index(), None);
    }

    #[test]
    fn cells_and_complement() {
        let m = CellMask::from_index(0b1010, 4);
        assert_eq!(m.cells().collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(m.complement().to_index(), Some(0b0101));
    }
}
