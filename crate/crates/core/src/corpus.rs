//! Seeded random inputs for the property suites.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complexes::{koszul_complex, ChainComplex, ChainMap};
use crate::derived::{DerivedInput, FpModule};
use crate::exactla::{Integers, Matrix, ScalarField};
use crate::grobner::{Ideal, Monomial, Poly, PolyRing};
use crate::ring::Ring;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_monomial<F: ScalarField>(ring: &PolyRing<F>, rng: &mut ChaCha8Rng, max_exp: u16) -> Monomial {
    loop {
        let exps: Vec<u16> = (0..ring.nvars()).map(|_| rng.gen_range(0..=max_exp)).collect();
        let m = Monomial::from_exps(&exps);
        if !m.is_one() {
            return m;
        }
    }
}

fn small_coefficient<F: ScalarField>(ring: &PolyRing<F>, rng: &mut ChaCha8Rng) -> F::Elem {
    let c = *[1i64, -1, 2, -2, 3].choose(rng).expect("nonempty");
    ring.field().from_i64(c)
}

/// A nonconstant monomial, or with `binomial` a difference of two of them.
pub fn random_element<F: ScalarField>(ring: &PolyRing<F>, rng: &mut ChaCha8Rng, binomial: bool) -> Poly<F::Elem> {
    let m = random_monomial(ring, rng, 2);
    if binomial && rng.gen_bool(0.5) {
        let other = if rng.gen_bool(0.3) { Monomial::one(ring.nvars()) } else { random_monomial(ring, rng, 2) };
        let c = small_coefficient(ring, rng);
        let p = ring.sub(&ring.term(m, ring.field().one()), &ring.term(other, c));
        if !p.is_zero() {
            return p;
        }
        return ring.var(0);
    }
    ring.term(m, ring.field().one())
}

pub fn random_ideal<F: ScalarField>(ring: &PolyRing<F>, rng: &mut ChaCha8Rng, binomial: bool) -> Ideal<F> {
    let n = rng.gen_range(1..=2);
    Ideal::new(ring, (0..n).map(|_| random_element(ring, rng, binomial)).collect())
}

fn random_entry<F: ScalarField>(ring: &PolyRing<F>, rng: &mut ChaCha8Rng, binomial: bool) -> Poly<F::Elem> {
    if rng.gen_bool(0.3) {
        ring.zero()
    } else {
        random_element(ring, rng, binomial)
    }
}

/// Small bounded complexes with finitely generated homology: cyclic modules, Koszul complexes,
/// two-term complexes, and shifts or sums of these.
pub fn random_object<F: ScalarField>(ring: &PolyRing<F>, rng: &mut ChaCha8Rng, binomial: bool) -> DerivedInput<PolyRing<F>> {
    match rng.gen_range(0..5) {
        0 => {
            let i = random_ideal(ring, rng, binomial);
            FpModule::cyclic(ring.clone(), i.gens().to_vec()).into()
        }
        1 => {
            let n = rng.gen_range(1..=2);
            let elems: Vec<Poly<F::Elem>> = (0..n).map(|_| random_element(ring, rng, binomial)).collect();
            koszul_complex(ring, &elems).into()
        }
        2 => {
            let (r, c) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
            let d = Matrix::from_fn(r, c, |_, _| random_entry(ring, rng, binomial));
            ChainComplex::from_differentials(ring.clone(), BTreeMap::from([(1, d)])).expect("two-term complex").into()
        }
        3 => {
            let base = random_complex(ring, rng, binomial);
            base.shift(rng.gen_range(-1..=1)).into()
        }
        _ => {
            let a = random_complex(ring, rng, binomial);
            let b = random_complex(ring, rng, binomial);
            a.direct_sum(&b).expect("same ring").into()
        }
    }
}

/// Like [`random_object`], always as a free complex.
pub fn random_complex<F: ScalarField>(ring: &PolyRing<F>, rng: &mut ChaCha8Rng, binomial: bool) -> ChainComplex<PolyRing<F>> {
    if rng.gen_bool(0.5) {
        let e = random_element(ring, rng, binomial);
        koszul_complex(ring, &[e])
    } else {
        let i = random_ideal(ring, rng, binomial);
        koszul_complex(ring, i.gens())
    }
}

/// Multiplication by a ring element on a complex supported in `V(a)`.
///
/// The complex is `K(a) ⊗ W`; the scalar is a unit plus an element of `a`, an element of `a`,
/// or an arbitrary element, so both quasi-isomorphisms and non-quasi-isomorphisms occur.
pub fn random_supported_map<F: ScalarField>(
    ring: &PolyRing<F>,
    rng: &mut ChaCha8Rng,
    a: &Ideal<F>,
) -> ChainMap<PolyRing<F>> {
    let w = random_complex(ring, rng, true);
    let y = koszul_complex(ring, a.gens()).tensor(&w).expect("same ring").pruned();
    let g = a.gens().choose(rng).cloned().unwrap_or_else(|| ring.zero());
    let scalar = match rng.gen_range(0..3) {
        0 => ring.add(&ring.one(), &ring.mul(&g, &random_element(ring, rng, false))),
        1 => g,
        _ => random_element(ring, rng, true),
    };
    ChainMap::scalar(&y, &scalar)
}

/// A complex of free abelian groups with small random differentials satisfying `d² = 0`.
pub fn random_integer_complex(rng: &mut ChaCha8Rng) -> ChainComplex<Integers> {
    // d_2 = A B', d_1 = C with C A = 0 built from a kernel basis.
    let n0 = rng.gen_range(1..=3);
    let n1 = rng.gen_range(1..=4);
    let n2 = rng.gen_range(0..=3);
    let entry = |rng: &mut ChaCha8Rng| num_bigint::BigInt::from(rng.gen_range(-4i64..=4));
    let d1 = Matrix::from_fn(n0, n1, |_, _| entry(rng));
    let ring = Integers;
    let k = crate::ring::ModuleAlgebra::kernel(&ring, &d1);
    let mut diffs = BTreeMap::from([(1, d1)]);
    if n2 > 0 && k.ncols() > 0 {
        let mix = Matrix::from_fn(k.ncols(), n2, |_, _| entry(rng));
        diffs.insert(2, k.mul(&ring, &mix));
    }
    let mut ranks = BTreeMap::from([(0, n0), (1, n1)]);
    ranks.insert(2, if diffs.contains_key(&2) { n2 } else { 0 });
    ChainComplex::new(ring, ranks, diffs).expect("d^2 = 0 by construction")
}
