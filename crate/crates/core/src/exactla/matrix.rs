use crate::error::{Error, Result};
use crate::ring::Ring;

/// Dense row-major matrix of exact ring elements.
///
/// Shapes with zero rows or zero columns are legal and carry their other dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix { rows, cols, data: vec![value; rows * cols] }
    }

    /// Builds from row vectors; `cols` is needed when there are no rows.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Result<Self> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend(r);
        }
        Ok(Matrix { rows: nrows, cols, data })
    }

    pub fn from_cols(cols: Vec<Vec<T>>, rows: usize) -> Result<Self> {
        let ncols = cols.len();
        for (j, c) in cols.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "column {j} has {} entries, expected {rows}",
                    c.len()
                )));
            }
        }
        Ok(Matrix::from_fn(rows, ncols, |i, j| cols[j][i].clone()))
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let rows: Vec<usize> = (0..self.rows).collect();
        self.select(&rows, cols)
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let cols: Vec<usize> = (0..self.cols).collect();
        self.select(rows, &cols)
    }

    pub fn row_range(&self, start: usize, end: usize) -> Self {
        let rows: Vec<usize> = (start..end).collect();
        self.select_rows(&rows)
    }

    pub fn col_range(&self, start: usize, end: usize) -> Self {
        let cols: Vec<usize> = (start..end).collect();
        self.select_cols(&cols)
    }

    /// Horizontal concatenation; row counts must agree.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn zeros<R: Ring<Elem = T>>(ring: &R, rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, ring.zero())
    }

    pub fn identity<R: Ring<Elem = T>>(ring: &R, n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
    }

    pub fn scalar<R: Ring<Elem = T>>(ring: &R, n: usize, c: &T) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { c.clone() } else { ring.zero() })
    }

    pub fn is_zero<R: Ring<Elem = T>>(&self, ring: &R) -> bool {
        self.data.iter().all(|x| ring.is_zero(x))
    }

    pub fn mul<R: Ring<Elem = T>>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if ring.is_zero(b) {
                        continue;
                    }
                    let prod = ring.mul(a, b);
                    let cur = out.get(i, j);
                    let next = ring.add(cur, &prod);
                    out.set(i, j, next);
                }
            }
        }
        out
    }

    pub fn add<R: Ring<Elem = T>>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape(), "matrix sum shape mismatch");
        Matrix::from_fn(self.rows, self.cols, |i, j| ring.add(self.get(i, j), other.get(i, j)))
    }

    pub fn sub<R: Ring<Elem = T>>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape(), "matrix difference shape mismatch");
        Matrix::from_fn(self.rows, self.cols, |i, j| ring.sub(self.get(i, j), other.get(i, j)))
    }

    pub fn neg<R: Ring<Elem = T>>(&self, ring: &R) -> Self {
        self.map(|x| ring.neg(x))
    }

    pub fn scale<R: Ring<Elem = T>>(&self, ring: &R, c: &T) -> Self {
        self.map(|x| ring.mul(c, x))
    }

    /// Block-diagonal sum.
    pub fn direct_sum<R: Ring<Elem = T>>(&self, ring: &R, other: &Self) -> Self {
        Matrix::from_fn(self.rows + other.rows, self.cols + other.cols, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j).clone()
            } else if i >= self.rows && j >= self.cols {
                other.get(i - self.rows, j - self.cols).clone()
            } else {
                ring.zero()
            }
        })
    }

    /// Kronecker product `self ⊗ other`, index `(i*p + k, j*q + l)`.
    pub fn kron<R: Ring<Elem = T>>(&self, ring: &R, other: &Self) -> Self {
        let (p, q) = other.shape();
        Matrix::from_fn(self.rows * p, self.cols * q, |r, c| {
            let (i, k) = (r / p, r % p);
            let (j, l) = (c / q, c % q);
            ring.mul(self.get(i, j), other.get(k, l))
        })
    }

    /// Drops columns that are entirely zero.
    pub fn drop_zero_cols<R: Ring<Elem = T>>(&self, ring: &R) -> Self {
        let keep: Vec<usize> =
            (0..self.cols).filter(|&j| (0..self.rows).any(|i| !ring.is_zero(self.get(i, j)))).collect();
        self.select_cols(&keep)
    }

    pub fn nonzero_count<R: Ring<Elem = T>>(&self, ring: &R) -> usize {
        self.data.iter().filter(|x| !ring.is_zero(x)).count()
    }

    pub fn render<R: Ring<Elem = T>>(&self, ring: &R) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let r: Vec<String> = self.row(i).iter().map(|x| ring.render(x)).collect();
                format!("[{}]", r.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}
