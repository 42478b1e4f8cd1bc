use std::collections::BTreeMap;

use super::{ChainComplex, ChainMap};
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::ring::ModuleAlgebra;

/// Degrees `p` of the first factor contributing to total degree `n`, in basis order.
/// Blocks are ordered by decreasing `p`; inside a block the index of `e_a ⊗ f_b` is `a * rank(G_q) + b`.
pub(crate) fn tensor_blocks(f: &BTreeMap<i64, usize>, g: &BTreeMap<i64, usize>, n: i64) -> Vec<(i64, usize)> {
    let mut out = Vec::new();
    let mut offset = 0;
    for (&p, &rp) in f.iter().rev() {
        let rq = g.get(&(n - p)).copied().unwrap_or(0);
        if rq > 0 {
            out.push((p, offset));
            offset += rp * rq;
        }
    }
    out
}

/// Degrees `i` of the source contributing to `Hom_k`, ascending; `g_i` is vectorized row-major.
pub(crate) fn hom_blocks(f: &BTreeMap<i64, usize>, g: &BTreeMap<i64, usize>, k: i64) -> Vec<(i64, usize)> {
    let mut out = Vec::new();
    let mut offset = 0;
    for (&i, &ri) in f {
        let rt = g.get(&(i + k)).copied().unwrap_or(0);
        if rt > 0 {
            out.push((i, offset));
            offset += ri * rt;
        }
    }
    out
}

pub(crate) fn place<R: ModuleAlgebra>(ring: &R, target: &mut Matrix<R::Elem>, r0: usize, c0: usize, block: &Matrix<R::Elem>) {
    for i in 0..block.nrows() {
        for j in 0..block.ncols() {
            let v = block.get(i, j);
            if !ring.is_zero(v) {
                let cur = target.get(r0 + i, c0 + j).clone();
                target.set(r0 + i, c0 + j, ring.add(&cur, v));
            }
        }
    }
}

pub(crate) fn sign<R: ModuleAlgebra>(ring: &R, odd: bool) -> R::Elem {
    if odd {
        ring.from_i64(-1)
    } else {
        ring.one()
    }
}

fn check_ring<R: ModuleAlgebra>(a: &R, b: &R) -> Result<()> {
    if a != b {
        return Err(Error::RingMismatch(format!("{} vs {}", a.describe(), b.describe())));
    }
    Ok(())
}

impl<R: ModuleAlgebra> ChainComplex<R> {
    /// `(Σ^n X)_i = X_{i-n}` with differential `(-1)^n d`.
    pub fn shift(&self, n: i64) -> ChainComplex<R> {
        let ring = self.ring().clone();
        let s = sign(&ring, n.rem_euclid(2) == 1);
        let ranks = self.ranks().iter().map(|(&i, &r)| (i + n, r)).collect();
        let diffs = self.differentials().iter().map(|(&i, d)| (i + n, d.scale(&ring, &s))).collect();
        ChainComplex::new(ring, ranks, diffs).expect("shift of a complex")
    }

    pub fn direct_sum(&self, other: &ChainComplex<R>) -> Result<ChainComplex<R>> {
        check_ring(self.ring(), other.ring())?;
        let ring = self.ring().clone();
        let mut ranks = self.ranks().clone();
        for (&i, &r) in other.ranks() {
            *ranks.entry(i).or_insert(0) += r;
        }
        let diffs = ranks.keys().map(|&i| (i, self.d(i).direct_sum(&ring, &other.d(i)))).collect();
        ChainComplex::new(ring, ranks, diffs)
    }

    /// Total complex of `self ⊗ other` with `d(a ⊗ b) = da ⊗ b + (-1)^{|a|} a ⊗ db`.
    pub fn tensor(&self, other: &ChainComplex<R>) -> Result<ChainComplex<R>> {
        check_ring(self.ring(), other.ring())?;
        let ring = self.ring().clone();
        let (f, g) = (self, other);
        let mut ranks = BTreeMap::new();
        for (&p, &rp) in f.ranks() {
            for (&q, &rq) in g.ranks() {
                *ranks.entry(p + q).or_insert(0) += rp * rq;
            }
        }
        let mut diffs = BTreeMap::new();
        for &n in ranks.keys() {
            let rows = ranks.get(&(n - 1)).copied().unwrap_or(0);
            let cols = ranks[&n];
            let mut d = Matrix::zeros(&ring, rows, cols);
            let src = tensor_blocks(f.ranks(), g.ranks(), n);
            let tgt: BTreeMap<i64, usize> = tensor_blocks(f.ranks(), g.ranks(), n - 1).into_iter().collect();
            for &(p, c0) in &src {
                let q = n - p;
                if let Some(&r0) = tgt.get(&(p - 1)) {
                    let block = f.d(p).kron(&ring, &Matrix::identity(&ring, g.rank(q)));
                    place(&ring, &mut d, r0, c0, &block);
                }
                if let Some(&r0) = tgt.get(&p) {
                    let s = sign(&ring, p.rem_euclid(2) == 1);
                    let block = Matrix::identity(&ring, f.rank(p)).kron(&ring, &g.d(q)).scale(&ring, &s);
                    place(&ring, &mut d, r0, c0, &block);
                }
            }
            diffs.insert(n, d);
        }
        ChainComplex::new(ring, ranks, diffs)
    }

    /// `Hom(self, other)_k = ∏_i Hom(X_i, Y_{i+k})`, `∂g = ∂_Y g - (-1)^k g ∂_X`.
    pub fn hom(&self, other: &ChainComplex<R>) -> Result<ChainComplex<R>> {
        check_ring(self.ring(), other.ring())?;
        let ring = self.ring().clone();
        let (f, g) = (self, other);
        let mut ranks = BTreeMap::new();
        for (&i, &ri) in f.ranks() {
            for (&j, &rj) in g.ranks() {
                *ranks.entry(j - i).or_insert(0) += ri * rj;
            }
        }
        let mut diffs = BTreeMap::new();
        for &k in ranks.keys() {
            let rows = ranks.get(&(k - 1)).copied().unwrap_or(0);
            let mut d = Matrix::zeros(&ring, rows, ranks[&k]);
            let src = hom_blocks(f.ranks(), g.ranks(), k);
            let tgt: BTreeMap<i64, usize> = hom_blocks(f.ranks(), g.ranks(), k - 1).into_iter().collect();
            let s = sign(&ring, k.rem_euclid(2) == 0);
            for &(i, c0) in &src {
                // ∂_Y ∘ g_i lands in Hom(X_i, Y_{i+k-1}).
                if let Some(&r0) = tgt.get(&i) {
                    let block = g.d(i + k).kron(&ring, &Matrix::identity(&ring, f.rank(i)));
                    place(&ring, &mut d, r0, c0, &block);
                }
                // g_i ∘ ∂_X lands in Hom(X_{i+1}, Y_{i+k}).
                if let Some(&r0) = tgt.get(&(i + 1)) {
                    let rt = g.rank(i + k);
                    let block =
                        Matrix::identity(&ring, rt).kron(&ring, &f.d(i + 1).transpose()).scale(&ring, &s);
                    place(&ring, &mut d, r0, c0, &block);
                }
            }
            diffs.insert(k, d);
        }
        ChainComplex::new(ring, ranks, diffs)
    }

    /// Brutal truncation keeping degrees in `lo..=hi`. Not a complex map in general; used
    /// for windows of resolutions.
    pub fn brutal_window(&self, lo: i64, hi: i64) -> ChainComplex<R> {
        let ranks = self.ranks().range(lo..=hi).map(|(&i, &r)| (i, r)).collect();
        let diffs = self
            .differentials()
            .iter()
            .filter(|(&i, _)| i > lo && i <= hi)
            .map(|(&i, d)| (i, d.clone()))
            .collect();
        ChainComplex::new(self.ring().clone(), ranks, diffs).expect("window of a complex")
    }

    /// Free complex with `H_i` unchanged for `i <= s` and zero above `s`.
    ///
    /// Keeps `X_{<= s+1}` and kills the cycles in degree `s+1` by iterated syzygies;
    /// fails if these do not terminate within `max_len` steps.
    pub fn truncate_soft_above(&self, s: i64, max_len: usize) -> Result<ChainComplex<R>> {
        let ring = self.ring().clone();
        let mut ranks: BTreeMap<i64, usize> = self.ranks().range(..=s + 1).map(|(&i, &r)| (i, r)).collect();
        let mut diffs: BTreeMap<i64, Matrix<R::Elem>> =
            self.differentials().range(..=s + 1).map(|(&i, d)| (i, d.clone())).collect();
        let mut top = s + 1;
        let mut last = self.d(s + 1);
        for _ in 0..=max_len {
            let k = ring.kernel(&last);
            let cols: Vec<usize> = (0..k.ncols()).filter(|&j| k.col(j).iter().any(|x| !ring.is_zero(x))).collect();
            let k = k.select_cols(&cols);
            if k.ncols() == 0 {
                return Ok(ChainComplex::new(ring, ranks, diffs)?.pruned());
            }
            top += 1;
            ranks.insert(top, k.ncols());
            diffs.insert(top, k.clone());
            last = k;
        }
        Err(Error::PreconditionFailed(format!("syzygies did not terminate within {max_len} steps")))
    }
}

/// `cone(f)_n = Z_n ⊕ Y_{n-1}` with `d = [[∂_Z, f], [0, -∂_Y]]`.
pub fn cone<R: ModuleAlgebra>(f: &ChainMap<R>) -> ChainComplex<R> {
    let (y, z) = (f.source(), f.target());
    let ring = y.ring().clone();
    let mut ranks: BTreeMap<i64, usize> = z.ranks().clone();
    for (&i, &r) in y.ranks() {
        *ranks.entry(i + 1).or_insert(0) += r;
    }
    let degrees: Vec<i64> = ranks.keys().copied().collect();
    let mut diffs = BTreeMap::new();
    for n in degrees {
        let top = z.d(n).hstack(&f.component(n - 1));
        let bottom = Matrix::zeros(&ring, y.rank(n - 2), z.rank(n)).hstack(&y.d(n - 1).neg(&ring));
        diffs.insert(n, top.vstack(&bottom));
    }
    ChainComplex::new(ring, ranks, diffs).expect("cone of a chain map")
}

impl<R: ModuleAlgebra> ChainMap<R> {
    pub fn cone(&self) -> ChainComplex<R> {
        cone(self)
    }

    /// `id_K ⊗ f: K ⊗ Y -> K ⊗ Z`.
    pub fn tensor_left(&self, k: &ChainComplex<R>) -> Result<ChainMap<R>> {
        let ring = k.ring().clone();
        let src = k.tensor(self.source())?;
        let tgt = k.tensor(self.target())?;
        let mut comps = BTreeMap::new();
        for &n in src.ranks().keys() {
            let mut m = Matrix::zeros(&ring, tgt.rank(n), src.rank(n));
            let sb: BTreeMap<i64, usize> = tensor_blocks(k.ranks(), self.source().ranks(), n).into_iter().collect();
            let tb: BTreeMap<i64, usize> = tensor_blocks(k.ranks(), self.target().ranks(), n).into_iter().collect();
            for (&p, &c0) in &sb {
                if let Some(&r0) = tb.get(&p) {
                    let block = Matrix::identity(&ring, k.rank(p)).kron(&ring, &self.component(n - p));
                    place(&ring, &mut m, r0, c0, &block);
                }
            }
            comps.insert(n, m);
        }
        ChainMap::new(src, tgt, comps)
    }

    /// `Hom(K, f): Hom(K, Y) -> Hom(K, Z)`, post-composition.
    pub fn hom_from(&self, k: &ChainComplex<R>) -> Result<ChainMap<R>> {
        let ring = k.ring().clone();
        let src = k.hom(self.source())?;
        let tgt = k.hom(self.target())?;
        let mut comps = BTreeMap::new();
        for &d in src.ranks().keys() {
            let mut m = Matrix::zeros(&ring, tgt.rank(d), src.rank(d));
            let sb: BTreeMap<i64, usize> = hom_blocks(k.ranks(), self.source().ranks(), d).into_iter().collect();
            let tb: BTreeMap<i64, usize> = hom_blocks(k.ranks(), self.target().ranks(), d).into_iter().collect();
            for (&i, &c0) in &sb {
                if let Some(&r0) = tb.get(&i) {
                    let block = self.component(i + d).kron(&ring, &Matrix::identity(&ring, k.rank(i)));
                    place(&ring, &mut m, r0, c0, &block);
                }
            }
            comps.insert(d, m);
        }
        ChainMap::new(src, tgt, comps)
    }
}
