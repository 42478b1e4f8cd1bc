//! Row reduction over fields, with a sparse path for low-density inputs.

use super::Matrix;
use crate::ring::Field;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinAlgConfig {
    /// Inputs whose fraction of nonzero entries is below this use sparse elimination.
    pub sparse_density_threshold: f64,
}

impl Default for LinAlgConfig {
    fn default() -> Self {
        LinAlgConfig { sparse_density_threshold: 0.25 }
    }
}

/// Reduced row echelon form: nonzero rows only, pivots ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct Rref<T> {
    pub rows: Vec<Vec<T>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

type SparseRow<T> = Vec<(usize, T)>;

fn rref_dense<F: Field>(field: &F, a: &Matrix<F::Elem>) -> Rref<F::Elem> {
    let (m, n) = a.shape();
    let mut rows: Vec<Vec<F::Elem>> = (0..m).map(|i| a.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !field.is_zero(&rows[i][c])) else { continue };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !field.is_zero(y) {
                    *x = field.sub(x, &field.mul(&f, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Rref { rows, pivots, ncols: n }
}

fn axpy_sparse<F: Field>(field: &F, row: &SparseRow<F::Elem>, c: &F::Elem, other: &SparseRow<F::Elem>) -> SparseRow<F::Elem> {
    // row - c * other
    let mut out = Vec::with_capacity(row.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < other.len() {
        let take_row = j >= other.len() || (i < row.len() && row[i].0 < other[j].0);
        let take_other = i >= row.len() || (j < other.len() && other[j].0 < row[i].0);
        if take_row {
            out.push(row[i].clone());
            i += 1;
        } else if take_other {
            let v = field.neg(&field.mul(c, &other[j].1));
            out.push((other[j].0, v));
            j += 1;
        } else {
            let v = field.sub(&row[i].1, &field.mul(c, &other[j].1));
            if !field.is_zero(&v) {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn rref_sparse<F: Field>(field: &F, a: &Matrix<F::Elem>) -> Rref<F::Elem> {
    let (m, n) = a.shape();
    // (pivot column, row) kept reduced against each other
    let mut basis: Vec<(usize, SparseRow<F::Elem>)> = Vec::new();
    for i in 0..m {
        let mut row: SparseRow<F::Elem> =
            a.row(i).iter().enumerate().filter(|(_, x)| !field.is_zero(x)).map(|(j, x)| (j, x.clone())).collect();
        for (pc, prow) in &basis {
            if let Ok(pos) = row.binary_search_by_key(pc, |e| e.0) {
                let c = row[pos].1.clone();
                row = axpy_sparse(field, &row, &c, prow);
            }
        }
        let Some((lead, lv)) = row.first().cloned() else { continue };
        let inv = field.inv(&lv);
        for e in row.iter_mut() {
            e.1 = field.mul(&e.1, &inv);
        }
        for (_, prow) in basis.iter_mut() {
            if let Ok(pos) = prow.binary_search_by_key(&lead, |e| e.0) {
                let c = prow[pos].1.clone();
                *prow = axpy_sparse(field, prow, &c, &row);
            }
        }
        basis.push((lead, row));
    }
    basis.sort_by_key(|(c, _)| *c);
    let pivots = basis.iter().map(|(c, _)| *c).collect();
    let rows = basis
        .into_iter()
        .map(|(_, r)| {
            let mut dense = vec![field.zero(); n];
            for (j, x) in r {
                dense[j] = x;
            }
            dense
        })
        .collect();
    Rref { rows, pivots, ncols: n }
}

pub fn rref<F: Field>(field: &F, a: &Matrix<F::Elem>, config: &LinAlgConfig) -> Rref<F::Elem> {
    let total = a.nrows() * a.ncols();
    if total == 0 {
        return Rref { rows: Vec::new(), pivots: Vec::new(), ncols: a.ncols() };
    }
    let density = a.nonzero_count(field) as f64 / total as f64;
    if density < config.sparse_density_threshold {
        rref_sparse(field, a)
    } else {
        rref_dense(field, a)
    }
}

/// Rank and a kernel basis in reduced echelon form (one vector per free column, ascending).
pub fn rank_kernel<F: Field>(field: &F, a: &Matrix<F::Elem>) -> (usize, Vec<Vec<F::Elem>>) {
    rank_kernel_with(field, a, &LinAlgConfig::default())
}

pub fn rank_kernel_with<F: Field>(field: &F, a: &Matrix<F::Elem>, config: &LinAlgConfig) -> (usize, Vec<Vec<F::Elem>>) {
    let r = rref(field, a, config);
    let n = a.ncols();
    let mut is_pivot = vec![false; n];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for f in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); n];
        v[f] = field.one();
        for (row, &p) in r.rows.iter().zip(&r.pivots) {
            v[p] = field.neg(&row[f]);
        }
        basis.push(v);
    }
    (r.pivots.len(), basis)
}

pub fn rank<F: Field>(field: &F, a: &Matrix<F::Elem>) -> usize {
    rref(field, a, &LinAlgConfig::default()).pivots.len()
}

/// Solves `a * x = b` column by column (free variables set to zero).
pub fn solve<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    let n = a.ncols();
    let aug = a.hstack(b);
    let r = rref(field, &aug, &LinAlgConfig::default());
    if r.pivots.iter().any(|&p| p >= n) {
        return None;
    }
    let mut x = Matrix::zeros(field, n, b.ncols());
    for (row, &p) in r.rows.iter().zip(&r.pivots) {
        for k in 0..b.ncols() {
            x.set(p, k, row[n + k].clone());
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{PrimeField, RationalField};
    use crate::ring::Ring;

    #[test]
    fn identity_has_trivial_kernel() {
        let q = RationalField;
        let (r, k) = rank_kernel(&q, &Matrix::identity(&q, 3));
        assert_eq!(r, 3);
        assert!(k.is_empty());
    }

    #[test]
    fn ones_over_f2() {
        let f2 = PrimeField::new(2).unwrap();
        let a = Matrix::from_rows(vec![vec![1, 1], vec![1, 1]], 2).unwrap();
        let (r, k) = rank_kernel(&f2, &a);
        assert_eq!(r, 1);
        assert_eq!(k, vec![vec![1, 1]]);
    }

    #[test]
    fn empty_rows_give_standard_basis() {
        let q = RationalField;
        let a: Matrix<_> = Matrix::zeros(&q, 0, 3);
        let (r, k) = rank_kernel(&q, &a);
        assert_eq!(r, 0);
        assert_eq!(k.len(), 3);
        for (i, v) in k.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                assert_eq!(*x, if i == j { q.one() } else { q.zero() });
            }
        }
    }

    #[test]
    fn sparse_and_dense_agree() {
        let f = PrimeField::new(101).unwrap();
        let a = Matrix::from_fn(6, 9, |i, j| if (i * 7 + j * 3) % 5 == 0 { ((i + 2 * j) % 101) as u64 } else { 0 });
        let dense = rref(&f, &a, &LinAlgConfig { sparse_density_threshold: 0.0 });
        let sparse = rref(&f, &a, &LinAlgConfig { sparse_density_threshold: 1.1 });
        assert_eq!(dense, sparse);
    }
}
