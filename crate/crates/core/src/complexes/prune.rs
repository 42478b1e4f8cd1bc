use std::collections::BTreeMap;

use super::ChainComplex;
use crate::exactla::Matrix;
use crate::ring::{ModuleAlgebra, Ring};

/// First entry (row-major) that is an obvious unit.
pub(crate) fn find_unit<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> Option<(usize, usize, R::Elem)> {
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            if let Some(inv) = ring.cheap_unit_inverse(a.get(i, j)) {
                return Some((i, j, inv));
            }
        }
    }
    None
}

/// `a - a[:, j] * inv * a[i, :]` with row `i` and column `j` removed.
pub(crate) fn eliminate_unit<R: Ring>(ring: &R, a: &Matrix<R::Elem>, i: usize, j: usize, inv: &R::Elem) -> Matrix<R::Elem> {
    let rows: Vec<usize> = (0..a.nrows()).filter(|&r| r != i).collect();
    let cols: Vec<usize> = (0..a.ncols()).filter(|&c| c != j).collect();
    Matrix::from_fn(rows.len(), cols.len(), |r, c| {
        let (r, c) = (rows[r], cols[c]);
        let x = a.get(r, c);
        let left = a.get(r, j);
        let right = a.get(i, c);
        if ring.is_zero(left) || ring.is_zero(right) {
            x.clone()
        } else {
            ring.sub(x, &ring.mul(&ring.mul(left, inv), right))
        }
    })
}

/// Removes generator/relation pairs joined by a unit entry, then zero relations.
/// The cokernel is unchanged up to isomorphism.
pub fn prune_presentation<R: Ring>(ring: &R, rel: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    let mut a = rel.clone();
    while let Some((i, j, inv)) = find_unit(ring, &a) {
        a = eliminate_unit(ring, &a, i, j, &inv);
    }
    a.drop_zero_cols(ring)
}

/// Like [`prune_presentation`], also reporting which original generators survive.
pub(crate) fn prune_presentation_tracked<R: Ring>(ring: &R, rel: &Matrix<R::Elem>) -> (Matrix<R::Elem>, Vec<usize>) {
    let mut a = rel.clone();
    let mut kept: Vec<usize> = (0..rel.nrows()).collect();
    while let Some((i, j, inv)) = find_unit(ring, &a) {
        a = eliminate_unit(ring, &a, i, j, &inv);
        kept.remove(i);
    }
    (a.drop_zero_cols(ring), kept)
}

impl<R: ModuleAlgebra> ChainComplex<R> {
    /// Splits off contractible pieces `R --u--> R` for obvious units `u`.
    /// The result is homotopy equivalent to `self`.
    pub fn pruned(&self) -> ChainComplex<R> {
        let ring = self.ring();
        let mut ranks = self.ranks().clone();
        let mut diffs: BTreeMap<i64, Matrix<R::Elem>> =
            ranks.keys().map(|&i| (i, self.d(i))).collect();
        loop {
            let hit = diffs.iter().find_map(|(&i, d)| find_unit(ring, d).map(|u| (i, u)));
            let Some((i, (r, c, inv))) = hit else { break };
            let d = eliminate_unit(ring, &diffs[&i], r, c, &inv);
            diffs.insert(i, d);
            if let Some(next) = diffs.get_mut(&(i + 1)) {
                let rows: Vec<usize> = (0..next.nrows()).filter(|&k| k != c).collect();
                *next = next.select_rows(&rows);
            }
            if let Some(prev) = diffs.get_mut(&(i - 1)) {
                let cols: Vec<usize> = (0..prev.ncols()).filter(|&k| k != r).collect();
                *prev = prev.select_cols(&cols);
            }
            *ranks.get_mut(&i).expect("degree present") -= 1;
            *ranks.get_mut(&(i - 1)).expect("degree present") -= 1;
        }
        ChainComplex::new(ring.clone(), ranks, diffs).expect("pruning preserves d^2 = 0")
    }
}
