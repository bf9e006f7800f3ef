#![allow(dead_code)]

use num_complex::Complex64;
use qtruth::linalg::pauli;
use qtruth::{ComplexMatrix, Tolerance};

pub fn tol() -> Tolerance {
    Tolerance::default()
}

/// `|v⟩⟨v|` computed entry by entry.
pub fn ket_bra(v: &[Complex64]) -> ComplexMatrix {
    ComplexMatrix::from_fn(v.len(), |i, j| v[i] * v[j].conj())
}

/// Plain triple-loop product, kept separate from the library's `mul`.
pub fn naive_mul(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let n = a.dim();
    ComplexMatrix::from_fn(n, |i, j| (0..n).map(|k| a.get(i, k) * b.get(k, j)).sum())
}

pub fn frob(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            s += (a.get(i, j) - b.get(i, j)).norm_sqr();
        }
    }
    s.sqrt()
}

pub fn sum(ms: &[ComplexMatrix]) -> ComplexMatrix {
    let n = ms[0].dim();
    ComplexMatrix::from_fn(n, |i, j| ms.iter().map(|m| m.get(i, j)).sum())
}

pub fn pauli_word(letters: &[u8]) -> ComplexMatrix {
    let one = |c: u8| match c % 4 {
        0 => pauli::identity(),
        1 => pauli::x(),
        2 => pauli::y(),
        _ => pauli::z(),
    };
    letters[1..]
        .iter()
        .fold(one(letters[0]), |acc, &c| acc.kron(&one(c)))
}

/// Whether `p` is (within `eps`) a sum of a subset of `cells`.
pub fn is_sum_of_cells(p: &ComplexMatrix, cells: &[ComplexMatrix], eps: f64) -> bool {
    let n = p.dim();
    let mut picked = Vec::new();
    for c in cells {
        // A cell is inside p iff p c = c, disjoint iff p c = 0.
        let pc = naive_mul(p, c);
        if frob(&pc, c) <= eps {
            picked.push(c.clone());
        } else if frob(&pc, &ComplexMatrix::zeros(n)) > eps {
            return false;
        }
    }
    let total = if picked.is_empty() {
        ComplexMatrix::zeros(n)
    } else {
        sum(&picked)
    };
    frob(&total, p) <= eps
}

/// Checks orthogonality, idempotence and completeness of `cells`.
pub fn is_decomposition(cells: &[ComplexMatrix], eps: f64) -> bool {
    let n = cells[0].dim();
    let zero = ComplexMatrix::zeros(n);
    for (j, a) in cells.iter().enumerate() {
        for (k, b) in cells.iter().enumerate() {
            let ab = naive_mul(a, b);
            let expected = if j == k { a } else { &zero };
            if frob(&ab, expected) > eps {
                return false;
            }
        }
    }
    frob(&sum(cells), &ComplexMatrix::identity(n)) <= eps
}
