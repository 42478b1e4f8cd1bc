use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use super::{closed_set_equal, homology_annihilator, supp_membership, Membership, SupportSet};
use crate::complexes::{ChainComplex, ChainMap};
use crate::corpus::{random_complex, random_element, random_ideal, random_object, rng};
use crate::derived::{derived_hom, derived_tensor, local_cohomology_fiber, DerivedInput, FpModule};
use crate::error::Result;
use crate::exactla::{Matrix, ScalarField};
use crate::grobner::{Ideal, PolyRing, PrimeIdeal};
use crate::ring::Ring;

/// Descriptor of a seeded corpus run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SupportSuite {
    pub seed: u64,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl IdentityOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportReport {
    pub ring: String,
    pub seed: u64,
    pub count: usize,
    pub outcomes: Vec<IdentityOutcome>,
}

impl SupportReport {
    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed())
    }
}

pub const IDENTITY_NAMES: [&str; 5] = ["tensor", "rhom", "cone", "minimal-primes", "local-cohomology"];

/// Maximal ideals `(x_1 - a_1, ..., x_n - a_n)` for points in the box.
pub fn maximal_panel<F: ScalarField>(ring: &PolyRing<F>, coords: &[RangeInclusive<i64>]) -> Result<Vec<PrimeIdeal<F>>> {
    let mut points: Vec<Vec<i64>> = vec![Vec::new()];
    for r in coords.iter().take(ring.nvars()) {
        points = points.into_iter().flat_map(|p| r.clone().map(move |a| [p.clone(), vec![a]].concat())).collect();
    }
    points
        .into_iter()
        .map(|pt| {
            let gens = pt
                .iter()
                .enumerate()
                .map(|(i, &a)| ring.sub(&ring.var(i), &ring.from_i64(a)))
                .collect();
            PrimeIdeal::certify(Ideal::new(ring, gens))
        })
        .collect()
}

fn homology_support<F: ScalarField>(ring: &PolyRing<F>, h: &BTreeMap<i64, FpModule<PolyRing<F>>>) -> SupportSet<F> {
    let mut ann = Ideal::unit(ring);
    for m in h.values().filter(|m| !m.is_zero()) {
        ann = ann.intersection(&m.annihilator()).expect("same ring");
    }
    SupportSet::closed(ann)
}

fn span<F: ScalarField>(x: &DerivedInput<PolyRing<F>>) -> (i64, i64) {
    x.term_span().unwrap_or((0, 0))
}

/// `[Y, 0]: Y -> Y ⊕ W` scaled by `r`.
fn scaled_inclusion<F: ScalarField>(
    y: &ChainComplex<PolyRing<F>>,
    w: &ChainComplex<PolyRing<F>>,
    r: &crate::grobner::Poly<F::Elem>,
) -> ChainMap<PolyRing<F>> {
    let ring = y.ring();
    let z = y.direct_sum(w).expect("same ring");
    let comps = y
        .ranks()
        .iter()
        .map(|(&i, &n)| (i, Matrix::scalar(ring, n, r).vstack(&Matrix::zeros(ring, w.rank(i), n))))
        .collect();
    ChainMap::new(y.clone(), z, comps).expect("scaled inclusion is a chain map")
}

type CaseResult = [Option<String>; 5];

fn check_case<F: ScalarField>(ring: &PolyRing<F>, seed: u64, case: usize, panel: &[PrimeIdeal<F>]) -> Result<CaseResult> {
    let mut g = rng(seed.wrapping_add(case as u64));
    let n = ring.nvars() as i64;
    let mut out: CaseResult = Default::default();
    let tag = |what: String| format!("case {case}: {what}");

    let x = random_object(ring, &mut g, true);
    let y = random_object(ring, &mut g, true);
    let sx = supp_of(&x);
    let sy = supp_of(&y);
    let (xl, xh) = span(&x);
    let (yl, yh) = span(&y);
    let t = derived_tensor(&x, &y, xl + yl..=xh + yh + n)?;
    let st = homology_support(ring, &t);
    let meet = SupportSet::closed(sx.defining_ideal.sum(&sy.defining_ideal)?);
    if !closed_set_equal(&st, &meet)? {
        out[0] = Some(tag(format!("supp(X ⊗ Y) = {st}, supp X ∩ supp Y = {meet}")));
    }

    let m = random_object(ring, &mut g, true);
    let sm = supp_of(&m);
    let (ml, mh) = span(&m);
    let h = derived_hom(&m, &x, xl - mh - n - 1..=xh - ml)?;
    let sh = homology_support(ring, &h);
    let meet = SupportSet::closed(sm.defining_ideal.sum(&sx.defining_ideal)?);
    if !closed_set_equal(&sh, &meet)? {
        out[1] = Some(tag(format!("supp RHom(M, X) = {sh}, supp M ∩ supp X = {meet}")));
    }

    let yc = random_complex(ring, &mut g, true);
    let wc = random_complex(ring, &mut g, true);
    let r = random_element(ring, &mut g, true);
    let f = scaled_inclusion(&yc, &wc, &r);
    let cone = f.cone();
    let iy = homology_annihilator(&yc.clone().into());
    let iz = homology_annihilator(&f.target().clone().into());
    let ic = homology_annihilator(&cone.into());
    // supp A ⊆ supp B ∪ supp C  iff  I_B I_C ⊆ √I_A.
    for (a, b, c, what) in [(&ic, &iy, &iz, "cone"), (&iz, &iy, &ic, "target"), (&iy, &iz, &ic, "source")] {
        if !a.radical_contains_ideal(&b.product(c)?) {
            out[2] = Some(tag(format!("supp of the {what} is not covered by the other two")));
        }
    }

    let z = random_object(ring, &mut g, false);
    let iz = homology_annihilator(&z);
    let minimal: Vec<Vec<usize>> = iz.minimal_prime_var_sets()?;
    let mut members: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..(1 << ring.nvars()) {
        let vars: Vec<usize> = (0..ring.nvars()).filter(|i| (mask >> i) & 1 == 1).collect();
        let p = PrimeIdeal::of_vars(ring, &vars)?;
        if supp_membership(&p, &z)?.member == Membership::Yes {
            members.push(vars);
        }
    }
    let is_sub = |a: &Vec<usize>, b: &Vec<usize>| a.iter().all(|v| b.contains(v));
    let mut min_small: Vec<Vec<usize>> =
        members.iter().filter(|p| !members.iter().any(|q| q != *p && is_sub(q, p))).cloned().collect();
    min_small.sort();
    let mut min_large = minimal.clone();
    min_large.sort();
    if min_small != min_large {
        out[3] = Some(tag(format!("minimal small-support primes {min_small:?}, minimal primes {min_large:?}")));
    }

    let a = loop {
        let a = random_ideal(ring, &mut g, true);
        if !a.is_unit() {
            break a;
        }
    };
    let unit: DerivedInput<PolyRing<F>> = ChainComplex::unit(ring.clone()).into();
    for mm in panel {
        let dims = local_cohomology_fiber(mm, &a, &unit, -n..=0)?;
        let nonzero = dims.values().any(|&d| d > 0);
        if nonzero != mm.contains_ideal(&a) {
            out[4] = Some(tag(format!("fiber of RΓ_{a} R at {mm} nonzero = {nonzero}")));
        }
    }
    Ok(out)
}

fn supp_of<F: ScalarField>(x: &DerivedInput<PolyRing<F>>) -> SupportSet<F> {
    SupportSet::closed(homology_annihilator(x))
}

/// Runs the five support identities on a seeded corpus; failures become report entries.
pub fn verify_support_identities<F: ScalarField>(ring: &PolyRing<F>, suite: SupportSuite) -> Result<SupportReport> {
    let panel = maximal_panel(ring, &[0..=3, 0..=2])?;
    let results: Vec<Result<CaseResult>> =
        (0..suite.count).into_par_iter().map(|c| check_case(ring, suite.seed, c, &panel)).collect();
    let mut outcomes: Vec<IdentityOutcome> = IDENTITY_NAMES
        .iter()
        .map(|&name| IdentityOutcome { name, checked: 0, failures: Vec::new() })
        .collect();
    for (case, r) in results.into_iter().enumerate() {
        match r {
            Ok(res) => {
                for (o, f) in outcomes.iter_mut().zip(res) {
                    o.checked += 1;
                    o.failures.extend(f);
                }
            }
            Err(e) => {
                for o in outcomes.iter_mut() {
                    o.checked += 1;
                    o.failures.push(format!("case {case}: error: {e}"));
                }
            }
        }
    }
    Ok(SupportReport { ring: ring.describe(), seed: suite.seed, count: suite.count, outcomes })
}
