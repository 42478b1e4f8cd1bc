use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use super::presented::PresentedComplex;
use super::FpModule;
use crate::complexes::{cech_complex, prune_presentation_tracked, ChainComplex};
use crate::error::{Error, Result};
use crate::exactla::{rank, Matrix, ScalarField};
use crate::grobner::{Ideal, Poly, PolyRing, PrimeIdeal};
use crate::ring::{ModuleAlgebra, Ring};

/// Extra resolution length beyond what the window strictly needs.
pub const RESOLUTION_GUARD: usize = 2;

/// An argument of a derived functor.
#[derive(Debug, Clone, PartialEq)]
pub enum DerivedInput<R: ModuleAlgebra> {
    Complex(ChainComplex<R>),
    Module(FpModule<R>),
}

impl<R: ModuleAlgebra> From<ChainComplex<R>> for DerivedInput<R> {
    fn from(c: ChainComplex<R>) -> Self {
        DerivedInput::Complex(c)
    }
}

impl<R: ModuleAlgebra> From<FpModule<R>> for DerivedInput<R> {
    fn from(m: FpModule<R>) -> Self {
        DerivedInput::Module(m)
    }
}

impl<R: ModuleAlgebra> DerivedInput<R> {
    pub fn ring(&self) -> &R {
        match self {
            DerivedInput::Complex(c) => c.ring(),
            DerivedInput::Module(m) => m.ring(),
        }
    }

    fn presented(&self) -> PresentedComplex<R> {
        match self {
            DerivedInput::Complex(c) => PresentedComplex::from_free(c),
            DerivedInput::Module(m) => PresentedComplex::from_module(m),
        }
    }

    /// Nonzero homology by degree.
    pub fn homology(&self) -> BTreeMap<i64, FpModule<R>> {
        match self {
            DerivedInput::Complex(c) => c.homology(),
            DerivedInput::Module(m) if m.is_zero() => BTreeMap::new(),
            DerivedInput::Module(m) => BTreeMap::from([(0, m.clone())]),
        }
    }

    /// Degrees of the outermost nonzero terms (not homology).
    pub fn term_span(&self) -> Option<(i64, i64)> {
        match self {
            DerivedInput::Complex(c) => c.span(),
            DerivedInput::Module(m) => (m.ngens() > 0).then_some((0, 0)),
        }
    }
}

/// How the resolution maps onto its target.
#[derive(Debug, Clone, PartialEq)]
pub enum Augmentation<R: ModuleAlgebra> {
    /// The target is already a bounded free complex.
    Identity,
    /// `F_0 -> R^g` sending basis vectors to generators of the module.
    OntoGenerators(Matrix<R::Elem>),
}

#[derive(Debug, Clone)]
pub struct ResolutionBundle<R: ModuleAlgebra> {
    pub target: DerivedInput<R>,
    pub resolution: ChainComplex<R>,
    pub augmentation: Augmentation<R>,
    pub length: usize,
    /// The last differential is injective, so the resolution is exact everywhere.
    pub complete: bool,
}

fn nonzero_cols<R: ModuleAlgebra>(ring: &R, a: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    let cols: Vec<usize> = (0..a.ncols()).filter(|&j| a.col(j).iter().any(|x| !ring.is_zero(x))).collect();
    a.select_cols(&cols)
}

/// Free resolution by iterated syzygies, pruning units as it goes.
pub fn free_resolution<R: ModuleAlgebra>(input: &DerivedInput<R>, length: usize) -> ResolutionBundle<R> {
    let m = match input {
        DerivedInput::Complex(c) => {
            return ResolutionBundle {
                target: input.clone(),
                resolution: c.clone(),
                augmentation: Augmentation::Identity,
                length: c.span().map(|(lo, hi)| (hi - lo) as usize).unwrap_or(0),
                complete: true,
            };
        }
        DerivedInput::Module(m) => m,
    };
    let ring = m.ring().clone();
    let (p, kept) = prune_presentation_tracked(&ring, m.relations());
    let g = m.ngens();
    let aug = Matrix::from_fn(g, kept.len(), |i, j| if kept[j] == i { ring.one() } else { ring.zero() });
    let mut diffs: Vec<Matrix<R::Elem>> = Vec::new();
    let mut complete = kept.is_empty() || p.ncols() == 0;
    if !complete && length >= 1 {
        diffs.push(p);
        while diffs.len() < length {
            let k = nonzero_cols(&ring, &ring.kernel(diffs.last().expect("nonempty")));
            if k.ncols() == 0 {
                break;
            }
            diffs.push(k);
            prune_top(&ring, &mut diffs);
        }
        complete = nonzero_cols(&ring, &ring.kernel(diffs.last().expect("nonempty"))).ncols() == 0;
    }
    let mut ranks = BTreeMap::new();
    ranks.insert(0, kept.len());
    for (i, d) in diffs.iter().enumerate() {
        ranks.insert(i as i64 + 1, d.ncols());
    }
    let dmap = diffs.into_iter().enumerate().map(|(i, d)| (i as i64 + 1, d)).collect();
    let resolution = ChainComplex::new(ring, ranks, dmap).expect("resolution is a complex");
    let length = resolution.span().map(|(_, hi)| hi as usize).unwrap_or(0);
    ResolutionBundle {
        target: input.clone(),
        resolution,
        augmentation: Augmentation::OntoGenerators(aug),
        length,
        complete,
    }
}

/// Splits off unit entries of the newest differential; `F_0` is never touched.
fn prune_top<R: ModuleAlgebra>(ring: &R, diffs: &mut Vec<Matrix<R::Elem>>) {
    let top = diffs.len() - 1;
    if top == 0 {
        return;
    }
    loop {
        let d = &diffs[top];
        let hit = (0..d.nrows())
            .flat_map(|i| (0..d.ncols()).map(move |j| (i, j)))
            .find_map(|(i, j)| ring.cheap_unit_inverse(d.get(i, j)).map(|inv| (i, j, inv)));
        let Some((r, c, inv)) = hit else { break };
        let rows: Vec<usize> = (0..d.nrows()).filter(|&k| k != r).collect();
        let cols: Vec<usize> = (0..d.ncols()).filter(|&k| k != c).collect();
        let new = Matrix::from_fn(rows.len(), cols.len(), |a, b| {
            let (a, b) = (rows[a], cols[b]);
            ring.sub(d.get(a, b), &ring.mul(&ring.mul(d.get(a, c), &inv), d.get(r, b)))
        });
        diffs[top] = new;
        let below = &diffs[top - 1];
        let keep: Vec<usize> = (0..below.ncols()).filter(|&k| k != r).collect();
        diffs[top - 1] = below.select_cols(&keep);
    }
    let cols = nonzero_cols(ring, &diffs[top]);
    diffs[top] = cols;
    if diffs[top].ncols() == 0 {
        diffs.pop();
    }
}

fn check_window(window: &RangeInclusive<i64>) -> Result<()> {
    if window.start() > window.end() {
        return Err(Error::Malformed(format!("empty window {}..{}", window.start(), window.end())));
    }
    Ok(())
}

fn zeros<R: ModuleAlgebra>(ring: &R, window: &RangeInclusive<i64>) -> BTreeMap<i64, FpModule<R>> {
    window.clone().map(|i| (i, FpModule::zero(ring.clone()))).collect()
}

fn need(len: i64) -> usize {
    len.max(0) as usize + RESOLUTION_GUARD
}

/// Homology of `(resolution of X) ⊗ Y` in the window.
pub fn derived_tensor<R: ModuleAlgebra>(
    x: &DerivedInput<R>,
    y: &DerivedInput<R>,
    window: RangeInclusive<i64>,
) -> Result<BTreeMap<i64, FpModule<R>>> {
    check_window(&window)?;
    if x.ring() != y.ring() {
        return Err(Error::RingMismatch("derived tensor of objects over different rings".into()));
    }
    let Some((y_inf, _)) = y.term_span() else { return Ok(zeros(x.ring(), &window)) };
    let f = free_resolution(x, need(window.end() - y_inf + 1)).resolution;
    let t = PresentedComplex::tensor_free(&f, &y.presented());
    Ok(t.homology_window(*window.start(), *window.end()))
}

/// Homology of `Hom(resolution of X, Y)` in the window; `Ext^i` sits in degree `-i`.
pub fn derived_hom<R: ModuleAlgebra>(
    x: &DerivedInput<R>,
    y: &DerivedInput<R>,
    window: RangeInclusive<i64>,
) -> Result<BTreeMap<i64, FpModule<R>>> {
    check_window(&window)?;
    if x.ring() != y.ring() {
        return Err(Error::RingMismatch("derived Hom of objects over different rings".into()));
    }
    let Some((_, y_sup)) = y.term_span() else { return Ok(zeros(x.ring(), &window)) };
    let f = free_resolution(x, need(y_sup - window.start() + 1)).resolution;
    let h = PresentedComplex::hom_free(&f, &y.presented());
    Ok(h.homology_window(*window.start(), *window.end()))
}

/// `Tor_i(M, N)` for `i` in the range.
pub fn tor<R: ModuleAlgebra>(m: &FpModule<R>, n: &FpModule<R>, degrees: RangeInclusive<i64>) -> Result<BTreeMap<i64, FpModule<R>>> {
    derived_tensor(&m.clone().into(), &n.clone().into(), degrees)
}

/// `Ext^i(M, N)` for `i` in the range, keyed by `i`.
pub fn ext<R: ModuleAlgebra>(m: &FpModule<R>, n: &FpModule<R>, degrees: RangeInclusive<i64>) -> Result<BTreeMap<i64, FpModule<R>>> {
    let window = -*degrees.end()..=-*degrees.start();
    let h = derived_hom(&m.clone().into(), &n.clone().into(), window)?;
    Ok(h.into_iter().map(|(i, v)| (-i, v)).collect())
}

/// `Γ_a(M)` with its inclusion into the generators of `M`.
pub fn torsion_submodule<F: ScalarField>(
    a: &Ideal<F>,
    m: &FpModule<PolyRing<F>>,
) -> Result<(FpModule<PolyRing<F>>, Matrix<Poly<F::Elem>>)> {
    m.torsion_submodule(a)
}

/// Multiplication by `f` on the residue field `R/m`, in its standard-monomial basis.
pub(crate) fn residue_multiplication<F: ScalarField>(
    m: &PrimeIdeal<F>,
    basis: &[crate::grobner::Monomial],
    f: &Poly<F::Elem>,
) -> Matrix<F::Elem> {
    let ring = m.ring();
    let field = ring.field();
    let d = basis.len();
    let mut out = Matrix::zeros(field, d, d);
    for (j, b) in basis.iter().enumerate() {
        let prod = ring.mul(f, &ring.term(b.clone(), field.one()));
        let nf = m.ideal().normal_form(&prod);
        for (mono, c) in nf.terms() {
            let i = basis.iter().position(|x| x == mono).expect("normal form lies in the standard basis");
            out.set(i, j, c.clone());
        }
    }
    out
}

/// `κ(m) ⊗ F` as a complex over the coefficient field.
pub(crate) fn fiber_complex<F: ScalarField>(m: &PrimeIdeal<F>, f: &ChainComplex<PolyRing<F>>) -> Result<ChainComplex<F>> {
    m.require_maximal()?;
    let basis = m.residue_basis().ok_or_else(|| Error::NotMaximal(m.to_string()))?;
    let field = m.ring().field().clone();
    let d = basis.len();
    let ranks = f.ranks().iter().map(|(&i, &r)| (i, r * d)).collect();
    let mut diffs = BTreeMap::new();
    for (&i, mat) in f.differentials() {
        let mut big = Matrix::zeros(&field, mat.nrows() * d, mat.ncols() * d);
        for r in 0..mat.nrows() {
            for c in 0..mat.ncols() {
                let block = residue_multiplication(m, &basis, mat.get(r, c));
                for a in 0..d {
                    for b in 0..d {
                        big.set(r * d + a, c * d + b, block.get(a, b).clone());
                    }
                }
            }
        }
        diffs.insert(i, big);
    }
    ChainComplex::new(field, ranks, diffs)
}

/// Homology dimensions of a complex of vector spaces, zero degrees omitted.
pub(crate) fn field_homology_dims<F: ScalarField>(c: &ChainComplex<F>) -> BTreeMap<i64, usize> {
    let field = c.ring();
    c.ranks()
        .iter()
        .map(|(&i, &n)| (i, n - rank(field, &c.d(i)) - rank(field, &c.d(i + 1))))
        .filter(|(_, v)| *v > 0)
        .collect()
}

/// `dim_{κ(m)} H_i(κ(m) ⊗^L RΓ_a X)` for `i` in the window.
///
/// After tensoring with `κ(m)`, a Čech summand localized at `x_S` vanishes when `x_S ∈ m`
/// and becomes `κ(m)` otherwise.
pub fn local_cohomology_fiber<F: ScalarField>(
    m: &PrimeIdeal<F>,
    a: &Ideal<F>,
    x: &DerivedInput<PolyRing<F>>,
    window: RangeInclusive<i64>,
) -> Result<BTreeMap<i64, usize>> {
    check_window(&window)?;
    m.require_maximal()?;
    if a.ring() != m.ring() || x.ring() != m.ring() {
        return Err(Error::RingMismatch("local cohomology fiber over different rings".into()));
    }
    let ring = m.ring();
    let field = ring.field().clone();
    let elems: Vec<Poly<F::Elem>> = a.gens().iter().filter(|g| !g.is_zero()).cloned().collect();
    let n = elems.len() as i64;
    let f = free_resolution(x, need(window.end() + n + 1)).resolution;
    let w = fiber_complex(m, &f)?;
    let d = m.residue_basis().map(|b| b.len()).unwrap_or(1);

    let cech = cech_complex(ring, &elems);
    let survives = |s: &[usize]| s.iter().all(|&i| !m.ideal().contains(&elems[i]));
    let live: BTreeMap<i64, Vec<Vec<usize>>> = cech
        .tags()
        .iter()
        .map(|(&i, tags)| (i, tags.iter().filter(|s| survives(s)).cloned().collect::<Vec<_>>()))
        .collect();
    let ranks = live.iter().map(|(&i, t)| (i, t.len())).collect();
    let mut diffs = BTreeMap::new();
    for (&i, src) in &live {
        if let Some(tgt) = live.get(&(i - 1)) {
            let mat = Matrix::from_fn(tgt.len(), src.len(), |r, c| {
                field.from_i64(cech.sign(&src[c], &tgt[r]).unwrap_or(0))
            });
            diffs.insert(i, mat);
        }
    }
    let cech_k = ChainComplex::new(field.clone(), ranks, diffs)?;
    let total = w.tensor(&cech_k)?;
    let dims = field_homology_dims(&total);
    Ok(window.map(|i| (i, dims.get(&i).copied().unwrap_or(0) / d)).collect())
}

/// A homology module of `LΛ^a X`, standing for `R̂^a ⊗ H`; the completion is never built.
#[derive(Debug, Clone)]
pub struct CompletionTagged<F: ScalarField> {
    pub module: FpModule<PolyRing<F>>,
    pub tag: Ideal<F>,
}

impl<F: ScalarField> CompletionTagged<F> {
    /// Completion is faithfully flat on finitely generated modules.
    pub fn is_zero(&self) -> bool {
        self.module.is_zero()
    }
}

/// `H_i(LΛ^a X) = R̂^a ⊗ H_i(X)` for `X` with finitely generated homology.
pub fn derived_completion_fg<F: ScalarField>(
    a: &Ideal<F>,
    x: &DerivedInput<PolyRing<F>>,
) -> Result<BTreeMap<i64, CompletionTagged<F>>> {
    if a.is_unit() {
        return Err(Error::UnsupportedIdeal(format!("{a} is not proper")));
    }
    Ok(x.homology()
        .into_iter()
        .map(|(i, module)| (i, CompletionTagged { module, tag: a.clone() }))
        .collect())
}
