//! Small support, co-support at maximal ideals, Bass numbers, and the support identity suite.

mod identities;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

pub use identities::{maximal_panel, verify_support_identities, IdentityOutcome, SupportReport, SupportSuite};

use crate::complexes::koszul_complex;
use crate::derived::{derived_hom, derived_tensor, ext, DerivedInput, FpModule};
use crate::error::{Error, Result};
use crate::exactla::ScalarField;
use crate::grobner::{Ideal, PolyRing, PrimeCertificate, PrimeIdeal};

/// The closed set `V(defining_ideal)`.
#[derive(Debug, Clone)]
pub struct SupportSet<F: ScalarField> {
    pub defining_ideal: Ideal<F>,
    /// Which annihilators were intersected.
    pub provenance: String,
}

impl<F: ScalarField> SupportSet<F> {
    pub fn closed(ideal: Ideal<F>) -> Self {
        SupportSet { provenance: format!("V{ideal}"), defining_ideal: ideal }
    }

    pub fn is_empty(&self) -> bool {
        self.defining_ideal.is_unit()
    }

    /// Whether the prime lies in the set.
    pub fn contains(&self, p: &PrimeIdeal<F>) -> bool {
        p.contains_ideal(&self.defining_ideal)
    }
}

impl<F: ScalarField> fmt::Display for SupportSet<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V{}", self.defining_ideal)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Yes,
    No,
    /// Nothing nonzero found up to the bound; not a proof of absence.
    UndetectedUpTo(usize),
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Membership::Yes => write!(f, "yes"),
            Membership::No => write!(f, "no"),
            Membership::UndetectedUpTo(b) => write!(f, "undetected up to {b}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Witness {
    pub degree: i64,
    pub invariant: String,
}

#[derive(Debug, Clone)]
pub struct MembershipVerdict<F: ScalarField> {
    pub prime: PrimeIdeal<F>,
    pub member: Membership,
    /// Present exactly for `Yes`.
    pub witness: Option<Witness>,
    pub bound: Option<usize>,
}

/// `∩_i Ann H_i(X)`; the unit ideal for an acyclic input.
pub fn homology_annihilator<F: ScalarField>(x: &DerivedInput<PolyRing<F>>) -> Ideal<F> {
    let ring = x.ring();
    let mut ann = Ideal::unit(ring);
    for h in x.homology().values() {
        ann = ann.intersection(&h.annihilator()).expect("same ring");
    }
    ann
}

/// `supp X = V(∩_i Ann H_i(X))` for finitely generated homology.
pub fn supp_fg<F: ScalarField>(x: &DerivedInput<PolyRing<F>>) -> SupportSet<F> {
    let homology = x.homology();
    let ann = homology_annihilator(x);
    let degrees: Vec<String> = homology.keys().map(|i| i.to_string()).collect();
    SupportSet {
        provenance: format!("annihilators of H_i for i in [{}]", degrees.join(", ")),
        defining_ideal: ann,
    }
}

fn span_or_zero<F: ScalarField>(x: &DerivedInput<PolyRing<F>>) -> Option<(i64, i64)> {
    x.term_span()
}

/// `p ∈ supp X` iff some `H_i(K(p) ⊗ X)` survives localization at `p`.
pub fn supp_membership<F: ScalarField>(p: &PrimeIdeal<F>, x: &DerivedInput<PolyRing<F>>) -> Result<MembershipVerdict<F>> {
    let ring = p.ring();
    if x.ring() != ring {
        return Err(Error::RingMismatch("prime and complex over different rings".into()));
    }
    let no = MembershipVerdict { prime: p.clone(), member: Membership::No, witness: None, bound: None };
    let Some((lo, hi)) = span_or_zero(x) else { return Ok(no) };
    let gens = p.ideal().reduced_gens();
    let k = koszul_complex(ring, &gens);
    let window = lo..=hi + gens.len() as i64;
    let h = derived_tensor(&k.into(), x, window)?;
    for (i, m) in h {
        if m.is_zero() {
            continue;
        }
        if p.contains_ideal(&m.annihilator()) {
            return Ok(MembershipVerdict {
                prime: p.clone(),
                member: Membership::Yes,
                witness: Some(Witness { degree: i, invariant: m.invariants().to_string() }),
                bound: None,
            });
        }
    }
    Ok(no)
}

/// Default Ext search bound: number of variables + amplitude + 2.
pub fn default_ext_bound<F: ScalarField>(x: &DerivedInput<PolyRing<F>>) -> usize {
    let amp = x.term_span().map(|(lo, hi)| (hi - lo) as usize).unwrap_or(0);
    x.ring().nvars() + amp + 2
}

/// `m ∈ co-supp X` iff `Ext^i(R/m, X) ≠ 0` for some `i`, searched for `0 <= i <= bound`.
pub fn cosupp_membership_maximal<F: ScalarField>(
    m: &PrimeIdeal<F>,
    x: &DerivedInput<PolyRing<F>>,
    bound: usize,
) -> Result<MembershipVerdict<F>> {
    m.require_maximal()?;
    let ring = m.ring();
    if x.ring() != ring {
        return Err(Error::RingMismatch("prime and complex over different rings".into()));
    }
    let verdict = |member, witness| MembershipVerdict { prime: m.clone(), member, witness, bound: Some(bound) };
    let Some((lo, hi)) = span_or_zero(x) else { return Ok(verdict(Membership::No, None)) };
    let residue = FpModule::cyclic(ring.clone(), m.ideal().reduced_gens());
    let h = derived_hom(&residue.into(), x, lo - bound as i64..=hi)?;
    for (i, module) in h.iter().rev() {
        if !module.is_zero() {
            let w = Witness { degree: *i, invariant: module.invariants().to_string() };
            return Ok(verdict(Membership::Yes, Some(w)));
        }
    }
    // R/m has projective dimension nvars over a polynomial ring, so the search is exhaustive.
    if !ring.is_quotient() && bound >= ring.nvars() {
        Ok(verdict(Membership::No, None))
    } else {
        Ok(verdict(Membership::UndetectedUpTo(bound), None))
    }
}

/// Co-support membership at any certified prime. Only maximal primes are decidable here:
/// at a non-maximal `p` the test needs `RHom(κ(p), X)` and `κ(p)` is not finitely presented,
/// so the query is refused rather than approximated.
pub fn cosupp_membership<F: ScalarField>(
    p: &PrimeIdeal<F>,
    x: &DerivedInput<PolyRing<F>>,
    bound: usize,
) -> Result<MembershipVerdict<F>> {
    if p.is_maximal() {
        return cosupp_membership_maximal(p, x, bound);
    }
    Err(Error::NotCertifiable(format!(
        "co-support at the non-maximal prime {p} needs Hom out of its residue field, which is not finitely presented"
    )))
}

/// Co-support as a closed subset. Not tabulated over polynomial rings: it is not closed in
/// general and the dualizing-complex description only applies in the artinian and DVR cases.
pub fn cosupp_set<F: ScalarField>(x: &DerivedInput<PolyRing<F>>) -> Result<SupportSet<F>> {
    let _ = x;
    Err(Error::NotTabulated(
        "co-support as a set over a polynomial ring; query membership at maximal primes instead".into(),
    ))
}

/// `V(a) = V(b)`.
pub fn closed_set_equal<F: ScalarField>(a: &SupportSet<F>, b: &SupportSet<F>) -> Result<bool> {
    if a.defining_ideal.ring() != b.defining_ideal.ring() {
        return Err(Error::RingMismatch("support sets over different rings".into()));
    }
    Ok(a.defining_ideal.same_radical(&b.defining_ideal))
}

/// `μ^i(p, M)` for `i` in the window: the generic rank of `Ext^i(R/p, M)` over `R/p`.
pub fn bass_numbers<F: ScalarField>(
    p: &PrimeIdeal<F>,
    m: &FpModule<PolyRing<F>>,
    window: RangeInclusive<usize>,
) -> Result<BTreeMap<usize, usize>> {
    let ring = p.ring().clone();
    let maximal = p.is_maximal();
    let monomial = p.certificate() == PrimeCertificate::MonomialPrime;
    if !maximal && !monomial {
        return Err(Error::NotCertifiable(format!(
            "Bass numbers need a maximal or monomial prime, got {p} ({})",
            p.certificate().name()
        )));
    }
    let quotient = FpModule::cyclic(ring.clone(), p.ideal().reduced_gens());
    let e = ext(&quotient, m, *window.start() as i64..=*window.end() as i64)?;
    let mut out = BTreeMap::new();
    for (i, module) in e {
        let mu = if maximal {
            let degree = p.residue_basis().map(|b| b.len()).unwrap_or(1);
            let dim = module.vector_space_dim().ok_or_else(|| {
                Error::PreconditionFailed(format!("Ext^{i}(R/{p}, M) is not finite dimensional"))
            })?;
            dim / degree
        } else {
            let vars = p.monomial_vars().unwrap_or_default();
            let zero = ring.field().zero();
            let values: Vec<Option<F::Elem>> =
                (0..ring.nvars()).map(|v| vars.contains(&v).then(|| zero.clone())).collect();
            let reduced = module.relations().map(|e| ring.substitute(e, &values));
            module.ngens() - ring.free_column_rank(&reduced)
        };
        out.insert(i as usize, mu);
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
