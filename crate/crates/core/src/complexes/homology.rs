use std::collections::BTreeMap;

use super::prune::prune_presentation_tracked;
use super::{ChainComplex, ChainMap};
use crate::derived::FpModule;
use crate::exactla::Matrix;
use crate::ring::ModuleAlgebra;

/// A homology module with cycle representatives of its generators.
#[derive(Debug, Clone)]
pub struct HomologyPiece<R: ModuleAlgebra> {
    pub module: FpModule<R>,
    /// Columns are cycles in the ambient free module, one per generator of `module`.
    pub cycles: Matrix<R::Elem>,
}

/// Lowest and highest nonvanishing homological degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Extent {
    pub inf: i64,
    pub sup: i64,
}

impl Extent {
    pub fn amp(&self) -> i64 {
        self.sup - self.inf
    }
}

fn nonzero_cols<R: ModuleAlgebra>(ring: &R, a: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    let cols: Vec<usize> = (0..a.ncols()).filter(|&j| a.col(j).iter().any(|x| !ring.is_zero(x))).collect();
    a.select_cols(&cols)
}

/// `ker(d_out) / im(d_in)` for free modules `R^n`, as a pruned presentation.
pub fn homology_at<R: ModuleAlgebra>(ring: &R, d_out: &Matrix<R::Elem>, d_in: &Matrix<R::Elem>) -> HomologyPiece<R> {
    let n = d_out.ncols();
    debug_assert_eq!(n, d_in.nrows());
    let z = nonzero_cols(ring, &ring.kernel(d_out));
    let k = z.ncols();
    if k == 0 {
        return HomologyPiece { module: FpModule::zero(ring.clone()), cycles: Matrix::zeros(ring, n, 0) };
    }
    let rel = ring.kernel(&z.hstack(d_in)).row_range(0, k);
    let (rel, kept) = prune_presentation_tracked(ring, &rel);
    HomologyPiece { module: FpModule::new(ring.clone(), rel), cycles: z.select_cols(&kept) }
}

/// Whether `phi: coker(p) -> coker(q)` (given on generators) is an isomorphism.
pub fn is_iso_of_presented<R: ModuleAlgebra>(
    ring: &R,
    phi: &Matrix<R::Elem>,
    p: &Matrix<R::Elem>,
    q: &Matrix<R::Elem>,
) -> bool {
    let (gt, gs) = phi.shape();
    if !ring.coker_is_zero(gt, &phi.hstack(q)) {
        return false;
    }
    if gs == 0 {
        return true;
    }
    let preimage = ring.kernel(&phi.hstack(q)).row_range(0, gs);
    ring.image_contains(p, &preimage)
}

/// Matrix of `H_i(f)` from the generators of `src` to the generators of `tgt`.
pub fn induced_on_homology<R: ModuleAlgebra>(
    ring: &R,
    f_i: &Matrix<R::Elem>,
    src: &HomologyPiece<R>,
    tgt: &HomologyPiece<R>,
    tgt_d_in: &Matrix<R::Elem>,
) -> Matrix<R::Elem> {
    let k = tgt.cycles.ncols();
    let images = f_i.mul(ring, &src.cycles);
    if images.ncols() == 0 {
        return Matrix::zeros(ring, k, 0);
    }
    let x = ring
        .solve(&tgt.cycles.hstack(tgt_d_in), &images)
        .expect("image of a cycle is a cycle");
    x.row_range(0, k)
}

impl<R: ModuleAlgebra> ChainComplex<R> {
    pub fn homology_piece(&self, i: i64) -> HomologyPiece<R> {
        homology_at(self.ring(), &self.d(i), &self.d(i + 1))
    }

    /// Nonzero homology modules by degree.
    pub fn homology(&self) -> BTreeMap<i64, FpModule<R>> {
        self.ranks()
            .keys()
            .filter_map(|&i| {
                let h = self.homology_piece(i).module;
                (!h.is_zero()).then_some((i, h))
            })
            .collect()
    }

    /// `H_i = 0`, decided without computing presentations.
    pub fn homology_vanishes_at(&self, i: i64) -> bool {
        if self.rank(i) == 0 {
            return true;
        }
        let z = self.ring().kernel(&self.d(i));
        self.ring().image_contains(&self.d(i + 1), &z)
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks().keys().all(|&i| self.homology_vanishes_at(i))
    }

    /// `None` for an acyclic complex.
    pub fn extent(&self) -> Option<Extent> {
        let nz: Vec<i64> = self.ranks().keys().copied().filter(|&i| !self.homology_vanishes_at(i)).collect();
        Some(Extent { inf: *nz.first()?, sup: *nz.last()? })
    }
}

impl<R: ModuleAlgebra> ChainMap<R> {
    /// Every induced map on homology is invertible.
    pub fn is_quasi_isomorphism(&self) -> bool {
        let ring = self.source().ring();
        let degrees: std::collections::BTreeSet<i64> =
            self.source().ranks().keys().chain(self.target().ranks().keys()).copied().collect();
        degrees.into_iter().all(|i| {
            let hs = self.source().homology_piece(i);
            let ht = self.target().homology_piece(i);
            let phi = induced_on_homology(ring, &self.component(i), &hs, &ht, &self.target().d(i + 1));
            is_iso_of_presented(ring, &phi, hs.module.relations(), ht.module.relations())
        })
    }
}
