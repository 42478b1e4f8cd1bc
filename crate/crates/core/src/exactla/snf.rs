//! Smith normal form over Euclidean domains.
//!
//! Pivot rule: smallest Euclidean size in the active block, ties broken by
//! lowest `(row, col)`. Invariant factors are normalized (positive / monic).

use std::cmp::Ordering;

use super::Matrix;
use crate::ring::EuclideanDomain;

#[derive(Debug, Clone, PartialEq)]
pub struct SmithForm<T> {
    /// Unimodular, `u * a * v = d`.
    pub u: Matrix<T>,
    pub d: Matrix<T>,
    /// Unimodular.
    pub v: Matrix<T>,
    /// Inverse of `v`.
    pub v_inv: Matrix<T>,
    /// `d[i][i]` for `i < min(rows, cols)`, trailing zeros included.
    pub diagonal: Vec<T>,
    pub rank: usize,
}

struct Work<'a, E: EuclideanDomain> {
    ring: &'a E,
    a: Matrix<E::Elem>,
    u: Matrix<E::Elem>,
    v: Matrix<E::Elem>,
    v_inv: Matrix<E::Elem>,
}

impl<E: EuclideanDomain> Work<'_, E> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    /// row_i += c * row_j
    fn add_row(&mut self, i: usize, j: usize, c: &E::Elem) {
        let r = self.ring;
        for m in [&mut self.a, &mut self.u] {
            for k in 0..m.ncols() {
                let x = m.get(j, k);
                if r.is_zero(x) {
                    continue;
                }
                let nv = r.add(m.get(i, k), &r.mul(c, x));
                m.set(i, k, nv);
            }
        }
    }

    /// col_i += c * col_j
    fn add_col(&mut self, i: usize, j: usize, c: &E::Elem) {
        let r = self.ring;
        for m in [&mut self.a, &mut self.v] {
            for k in 0..m.nrows() {
                let x = m.get(k, j);
                if r.is_zero(x) {
                    continue;
                }
                let nv = r.add(m.get(k, i), &r.mul(c, x));
                m.set(k, i, nv);
            }
        }
        // inverse: row_j of v_inv -= c * row_i
        let m = &mut self.v_inv;
        for k in 0..m.ncols() {
            let x = m.get(i, k);
            if r.is_zero(x) {
                continue;
            }
            let nv = r.sub(m.get(j, k), &r.mul(c, x));
            m.set(j, k, nv);
        }
    }

    fn scale_row(&mut self, i: usize, unit: &E::Elem) {
        let r = self.ring;
        for m in [&mut self.a, &mut self.u] {
            for k in 0..m.ncols() {
                let nv = r.mul(unit, m.get(i, k));
                m.set(i, k, nv);
            }
        }
    }

    fn smaller(&self, x: &E::Elem, best: Option<&E::Elem>) -> bool {
        match best {
            None => true,
            Some(b) => self.ring.size_cmp(x, b) == Ordering::Less,
        }
    }

    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.nrows() {
            for j in t..self.a.ncols() {
                let x = self.a.get(i, j);
                if self.ring.is_zero(x) {
                    continue;
                }
                if self.smaller(x, best.map(|(bi, bj)| self.a.get(bi, bj))) {
                    best = Some((i, j));
                }
            }
        }
        best
    }
}

pub fn smith_normal_form<E: EuclideanDomain>(ring: &E, a: &Matrix<E::Elem>) -> SmithForm<E::Elem> {
    let (m, n) = a.shape();
    let mut w = Work {
        ring,
        a: a.clone(),
        u: Matrix::identity(ring, m),
        v: Matrix::identity(ring, n),
        v_inv: Matrix::identity(ring, n),
    };
    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = w.find_pivot(t) else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            for i in t + 1..m {
                if ring.is_zero(w.a.get(i, t)) {
                    continue;
                }
                let (q, _) = ring.div_rem(w.a.get(i, t), w.a.get(t, t));
                w.add_row(i, t, &ring.neg(&q));
            }
            for j in t + 1..n {
                if ring.is_zero(w.a.get(t, j)) {
                    continue;
                }
                let (q, _) = ring.div_rem(w.a.get(t, j), w.a.get(t, t));
                w.add_col(j, t, &ring.neg(&q));
            }
            // smallest leftover in the pivot column, then the pivot row
            let mut best: Option<(usize, usize)> = None;
            for i in t + 1..m {
                let x = w.a.get(i, t);
                if !ring.is_zero(x) && w.smaller(x, best.map(|(bi, bj)| w.a.get(bi, bj))) {
                    best = Some((i, t));
                }
            }
            for j in t + 1..n {
                let x = w.a.get(t, j);
                if !ring.is_zero(x) && w.smaller(x, best.map(|(bi, bj)| w.a.get(bi, bj))) {
                    best = Some((t, j));
                }
            }
            if let Some((bi, bj)) = best {
                w.swap_rows(t, bi);
                w.swap_cols(t, bj);
                continue;
            }
            let mut offender = None;
            'scan: for i in t + 1..m {
                for j in t + 1..n {
                    if !ring.divides(w.a.get(t, t), w.a.get(i, j)) {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => w.add_row(t, i, &ring.one()),
                None => break,
            }
        }
        let unit = ring.canonical_unit(w.a.get(t, t));
        if !ring.is_one(&unit) {
            w.scale_row(t, &unit);
        }
        t += 1;
    }
    let diagonal = (0..m.min(n)).map(|i| w.a.get(i, i).clone()).collect();
    SmithForm { u: w.u, d: w.a, v: w.v, v_inv: w.v_inv, diagonal, rank: t }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{Integers, RationalField, UnivariatePolyRing};
    use crate::ring::Ring;
    use num_bigint::BigInt;

    fn zmat(rows: &[&[i64]]) -> Matrix<BigInt> {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(), cols)
            .unwrap()
    }

    fn check(a: &Matrix<BigInt>) -> SmithForm<BigInt> {
        let z = Integers;
        let s = smith_normal_form(&z, a);
        assert_eq!(s.u.mul(&z, a).mul(&z, &s.v), s.d);
        assert_eq!(s.v.mul(&z, &s.v_inv), Matrix::identity(&z, a.ncols()));
        s
    }

    #[test]
    fn diag_two_three() {
        let s = check(&zmat(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.diagonal, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn zero_matrix() {
        let s = check(&zmat(&[&[0, 0], &[0, 0]]));
        assert_eq!(s.diagonal, vec![BigInt::from(0), BigInt::from(0)]);
        assert_eq!(s.rank, 0);
    }

    #[test]
    fn two_four_six_eight() {
        let s = check(&zmat(&[&[2, 4], &[6, 8]]));
        assert_eq!(s.diagonal, vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn negative_entries_normalize_positive() {
        let s = check(&zmat(&[&[-4, 0, 0], &[0, -6, 0]]));
        assert_eq!(s.diagonal, vec![BigInt::from(2), BigInt::from(12)]);
    }

    #[test]
    fn univariate_polynomials() {
        let q = UnivariatePolyRing::new(RationalField, "x");
        let x = q.x();
        let x2 = q.mul(&x, &x);
        let a = Matrix::from_rows(vec![vec![x.clone(), q.zero()], vec![q.zero(), x2.clone()]], 2).unwrap();
        let s = smith_normal_form(&q, &a);
        assert_eq!(s.u.mul(&q, &a).mul(&q, &s.v), s.d);
        assert_eq!(q.render(&s.diagonal[0]), "x");
        assert_eq!(q.render(&s.diagonal[1]), "x^2");
        let b = Matrix::from_rows(vec![vec![q.from_i64(2), x.clone()]], 2).unwrap();
        let s = smith_normal_form(&q, &b);
        assert_eq!(q.render(&s.diagonal[0]), "1");
    }
}
