use crate::complexes::prune_presentation_tracked;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, ScalarField};
use crate::grobner::{Ideal, Monomial, Poly, PolyRing};
use crate::ring::{ModuleAlgebra, ModuleInvariants, Ring};

/// `coker(rels: R^r -> R^gens)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FpModule<R: Ring> {
    ring: R,
    rels: Matrix<R::Elem>,
}

impl<R: ModuleAlgebra> FpModule<R> {
    /// The number of generators is the number of rows of `rels`.
    pub fn new(ring: R, rels: Matrix<R::Elem>) -> Self {
        FpModule { ring, rels }
    }

    pub fn free(ring: R, rank: usize) -> Self {
        let rels = Matrix::zeros(&ring, rank, 0);
        FpModule { ring, rels }
    }

    pub fn zero(ring: R) -> Self {
        Self::free(ring, 0)
    }

    /// `R / (gens)`.
    pub fn cyclic(ring: R, gens: Vec<R::Elem>) -> Self {
        let n = gens.len();
        let rels = Matrix::from_rows(vec![gens], n).expect("one row");
        FpModule { ring, rels }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn ngens(&self) -> usize {
        self.rels.nrows()
    }

    pub fn relations(&self) -> &Matrix<R::Elem> {
        &self.rels
    }

    pub fn is_zero(&self) -> bool {
        self.ngens() == 0 || self.ring.coker_is_zero(self.ngens(), &self.rels)
    }

    pub fn invariants(&self) -> ModuleInvariants {
        self.ring.coker_invariants(self.ngens(), &self.rels)
    }

    /// Same module with unit relations eliminated.
    pub fn pruned(&self) -> Self {
        FpModule { ring: self.ring.clone(), rels: prune_presentation_tracked(&self.ring, &self.rels).0 }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        FpModule { ring: self.ring.clone(), rels: self.rels.direct_sum(&self.ring, &other.rels) }
    }

    pub fn render(&self) -> String {
        if self.rels.ncols() == 0 {
            return match self.ngens() {
                0 => "0".to_string(),
                1 => "R".to_string(),
                g => format!("R^{g}"),
            };
        }
        format!("coker {}", self.rels.render(&self.ring))
    }
}

impl<F: ScalarField> FpModule<PolyRing<F>> {
    /// `{r : r M = 0}`, the intersection of the annihilators of the generators.
    pub fn annihilator(&self) -> Ideal<F> {
        let ring = &self.ring;
        let g = self.ngens();
        let mut ann = Ideal::unit(ring);
        for j in 0..g {
            let e = Matrix::from_fn(g, 1, |i, _| if i == j { ring.one() } else { ring.zero() });
            let k = ring.kernel(&e.hstack(&self.rels));
            let gens: Vec<Poly<F::Elem>> = k.row(0).iter().filter(|p| !p.is_zero()).cloned().collect();
            let colon = Ideal::new(ring, gens);
            ann = ann.intersection(&colon).expect("same ring");
            if ann.is_zero() {
                break;
            }
        }
        ann
    }

    /// Dimension over the coefficient field, when finite.
    pub fn vector_space_dim(&self) -> Option<usize> {
        let g = self.ngens();
        if g == 0 {
            return Some(0);
        }
        let gb = self.ring.module_gb(&self.rels);
        let n = self.ring.nvars();
        let mut total = 0;
        for pos in 0..g as u32 {
            total += count_standard(n, &gb.leading_monomials(pos))?;
        }
        Some(total)
    }

    /// `Γ_a(M)` as a module together with its inclusion into the generators of `M`.
    pub fn torsion_submodule(&self, a: &Ideal<F>) -> Result<(FpModule<PolyRing<F>>, Matrix<Poly<F::Elem>>)> {
        let ring = &self.ring;
        if a.ring() != ring {
            return Err(Error::RingMismatch("ideal and module over different rings".into()));
        }
        let g = self.ngens();
        let gens: Vec<Poly<F::Elem>> = a.gens().iter().filter(|p| !p.is_zero()).cloned().collect();
        if gens.is_empty() || g == 0 {
            let t = Matrix::zeros(ring, g, 0);
            return Ok((FpModule::zero(ring.clone()), t));
        }
        // Saturate the relation submodule N: N_{t+1} = (N_t : a) until stable.
        let mut n_cur = self.rels.clone();
        loop {
            let next = colon_submodule(ring, &n_cur, &gens);
            if ring.image_contains(&n_cur, &next) {
                break;
            }
            n_cur = next;
        }
        let t = n_cur;
        let k = ring.kernel(&t.hstack(&self.rels));
        let rel = k.row_range(0, t.ncols());
        let (rel, kept) = prune_presentation_tracked(ring, &rel);
        let incl = t.select_cols(&kept);
        Ok((FpModule::new(ring.clone(), rel), incl))
    }
}

/// `{v : f v ∈ N for all f in gens}` for `N` the column span of `n`.
fn colon_submodule<F: ScalarField>(
    ring: &PolyRing<F>,
    n: &Matrix<Poly<F::Elem>>,
    gens: &[Poly<F::Elem>],
) -> Matrix<Poly<F::Elem>> {
    let g = n.nrows();
    let s = gens.len();
    let stacked = Matrix::from_fn(s * g, g, |r, c| if r % g == c { gens[r / g].clone() } else { ring.zero() });
    let mut blocks = Matrix::zeros(ring, 0, 0);
    for _ in 0..s {
        blocks = blocks.direct_sum(ring, n);
    }
    let k = ring.kernel(&stacked.hstack(&blocks));
    let v = k.row_range(0, g);
    let cols: Vec<usize> = (0..v.ncols()).filter(|&j| v.col(j).iter().any(|p| !p.is_zero())).collect();
    v.select_cols(&cols)
}

/// Number of monomials outside the monomial ideal generated by `lms`, when finite.
pub(crate) fn count_standard(n: usize, lms: &[Monomial]) -> Option<usize> {
    if lms.iter().any(|m| m.is_one()) {
        return Some(0);
    }
    let mut bounds = vec![u16::MAX; n];
    for m in lms {
        let s = m.support();
        if s.len() == 1 {
            bounds[s[0]] = bounds[s[0]].min(m.exps()[s[0]]);
        }
    }
    if bounds.iter().any(|&b| b == u16::MAX) {
        return None;
    }
    let mut count = 0;
    let mut exps = vec![0u16; n];
    loop {
        let m = Monomial::from_exps(&exps);
        if !lms.iter().any(|l| l.divides(&m)) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return Some(count);
            }
            exps[i] += 1;
            if exps[i] < bounds[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}
