//! Complexes whose terms are finitely presented (not necessarily free) modules.

use std::collections::BTreeMap;

use super::FpModule;
use crate::complexes::ops::{hom_blocks, place, sign, tensor_blocks};
use crate::complexes::{ChainComplex, HomologyPiece};
use crate::complexes::prune_presentation_tracked;
use crate::exactla::Matrix;
use crate::ring::ModuleAlgebra;

/// Term `i` is `coker(rels[i])` on `gens[i]` generators; `d_i` acts on generators.
#[derive(Debug, Clone)]
pub(crate) struct PresentedComplex<R: ModuleAlgebra> {
    ring: R,
    gens: BTreeMap<i64, usize>,
    rels: BTreeMap<i64, Matrix<R::Elem>>,
    diffs: BTreeMap<i64, Matrix<R::Elem>>,
}

impl<R: ModuleAlgebra> PresentedComplex<R> {
    pub fn from_free(c: &ChainComplex<R>) -> Self {
        let ring = c.ring().clone();
        let rels = c.ranks().iter().map(|(&i, &r)| (i, Matrix::zeros(&ring, r, 0))).collect();
        let diffs = c.ranks().keys().map(|&i| (i, c.d(i))).collect();
        PresentedComplex { ring, gens: c.ranks().clone(), rels, diffs }
    }

    pub fn from_module(m: &FpModule<R>) -> Self {
        let ring = m.ring().clone();
        let mut gens = BTreeMap::new();
        let mut rels = BTreeMap::new();
        if m.ngens() > 0 {
            gens.insert(0, m.ngens());
            rels.insert(0, m.relations().clone());
        }
        PresentedComplex { ring, gens, rels, diffs: BTreeMap::new() }
    }

    fn ngens(&self, i: i64) -> usize {
        self.gens.get(&i).copied().unwrap_or(0)
    }

    fn rel(&self, i: i64) -> Matrix<R::Elem> {
        self.rels.get(&i).cloned().unwrap_or_else(|| Matrix::zeros(&self.ring, self.ngens(i), 0))
    }

    fn d(&self, i: i64) -> Matrix<R::Elem> {
        self.diffs.get(&i).cloned().unwrap_or_else(|| Matrix::zeros(&self.ring, self.ngens(i - 1), self.ngens(i)))
    }

    /// `H_i` as a pruned presentation with cycle representatives.
    pub fn homology_piece(&self, i: i64) -> HomologyPiece<R> {
        let ring = &self.ring;
        let n = self.ngens(i);
        if n == 0 {
            return HomologyPiece { module: FpModule::zero(ring.clone()), cycles: Matrix::zeros(ring, 0, 0) };
        }
        let out = self.d(i).hstack(&self.rel(i - 1));
        let k = ring.kernel(&out).row_range(0, n);
        let cols: Vec<usize> = (0..k.ncols()).filter(|&j| k.col(j).iter().any(|x| !ring.is_zero(x))).collect();
        let z = k.select_cols(&cols);
        if z.ncols() == 0 {
            return HomologyPiece { module: FpModule::zero(ring.clone()), cycles: z };
        }
        let b = self.d(i + 1).hstack(&self.rel(i));
        let rel = ring.kernel(&z.hstack(&b)).row_range(0, z.ncols());
        let (rel, kept) = prune_presentation_tracked(ring, &rel);
        HomologyPiece { module: FpModule::new(ring.clone(), rel), cycles: z.select_cols(&kept) }
    }

    /// `H_i` for every `i` in `lo..=hi`, zero modules included.
    pub fn homology_window(&self, lo: i64, hi: i64) -> BTreeMap<i64, FpModule<R>> {
        (lo..=hi).map(|i| (i, self.homology_piece(i).module)).collect()
    }

    /// `F ⊗ Y` for a free complex `F`, with the basis conventions of [`ChainComplex::tensor`].
    pub fn tensor_free(f: &ChainComplex<R>, y: &PresentedComplex<R>) -> PresentedComplex<R> {
        let ring = f.ring().clone();
        let mut gens = BTreeMap::new();
        for (&p, &rp) in f.ranks() {
            for (&q, &gq) in &y.gens {
                *gens.entry(p + q).or_insert(0) += rp * gq;
            }
        }
        gens.retain(|_, g| *g > 0);
        let mut rels = BTreeMap::new();
        let mut diffs = BTreeMap::new();
        for &n in gens.keys() {
            let src = tensor_blocks(f.ranks(), &y.gens, n);
            let tgt: BTreeMap<i64, usize> = tensor_blocks(f.ranks(), &y.gens, n - 1).into_iter().collect();
            let mut d = Matrix::zeros(&ring, gens.get(&(n - 1)).copied().unwrap_or(0), gens[&n]);
            let mut rel = Matrix::zeros(&ring, gens[&n], 0);
            for &(p, c0) in &src {
                let q = n - p;
                let block_rel = Matrix::identity(&ring, f.rank(p)).kron(&ring, &y.rel(q));
                let mut padded = Matrix::zeros(&ring, gens[&n], block_rel.ncols());
                place(&ring, &mut padded, c0, 0, &block_rel);
                rel = rel.hstack(&padded);
                if let Some(&r0) = tgt.get(&(p - 1)) {
                    let block = f.d(p).kron(&ring, &Matrix::identity(&ring, y.ngens(q)));
                    place(&ring, &mut d, r0, c0, &block);
                }
                if let Some(&r0) = tgt.get(&p) {
                    let s = sign(&ring, p.rem_euclid(2) == 1);
                    let block = Matrix::identity(&ring, f.rank(p)).kron(&ring, &y.d(q)).scale(&ring, &s);
                    place(&ring, &mut d, r0, c0, &block);
                }
            }
            rels.insert(n, rel);
            diffs.insert(n, d);
        }
        PresentedComplex { ring, gens, rels, diffs }
    }

    /// `Hom(F, Y)` for a free complex `F`, with the conventions of [`ChainComplex::hom`].
    pub fn hom_free(f: &ChainComplex<R>, y: &PresentedComplex<R>) -> PresentedComplex<R> {
        let ring = f.ring().clone();
        let mut gens = BTreeMap::new();
        for (&i, &ri) in f.ranks() {
            for (&j, &gj) in &y.gens {
                *gens.entry(j - i).or_insert(0) += ri * gj;
            }
        }
        gens.retain(|_, g| *g > 0);
        let mut rels = BTreeMap::new();
        let mut diffs = BTreeMap::new();
        for &k in gens.keys() {
            let src = hom_blocks(f.ranks(), &y.gens, k);
            let tgt: BTreeMap<i64, usize> = hom_blocks(f.ranks(), &y.gens, k - 1).into_iter().collect();
            let mut d = Matrix::zeros(&ring, gens.get(&(k - 1)).copied().unwrap_or(0), gens[&k]);
            let mut rel = Matrix::zeros(&ring, gens[&k], 0);
            let s = sign(&ring, k.rem_euclid(2) == 0);
            for &(i, c0) in &src {
                let block_rel = y.rel(i + k).kron(&ring, &Matrix::identity(&ring, f.rank(i)));
                let mut padded = Matrix::zeros(&ring, gens[&k], block_rel.ncols());
                place(&ring, &mut padded, c0, 0, &block_rel);
                rel = rel.hstack(&padded);
                if let Some(&r0) = tgt.get(&i) {
                    let block = y.d(i + k).kron(&ring, &Matrix::identity(&ring, f.rank(i)));
                    place(&ring, &mut d, r0, c0, &block);
                }
                if let Some(&r0) = tgt.get(&(i + 1)) {
                    let block = Matrix::identity(&ring, y.ngens(i + k))
                        .kron(&ring, &f.d(i + 1).transpose())
                        .scale(&ring, &s);
                    place(&ring, &mut d, r0, c0, &block);
                }
            }
            rels.insert(k, rel);
            diffs.insert(k, d);
        }
        PresentedComplex { ring, gens, rels, diffs }
    }
}
