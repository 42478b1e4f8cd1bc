//! Adic finiteness: the equivalent finiteness conditions plus the support condition,
//! prime filtrations of monomial modules, and detection of isomorphisms through functors.

mod detect;
mod filtration;

use std::fmt;

pub use detect::{detect_iso_via_functor, DetectionMode, DetectionReport};
pub use filtration::{prime_filtration, FiltrationStep, PrimeFiltration};

use crate::complexes::koszul_complex;
use crate::derived::{derived_hom, derived_tensor, local_cohomology_fiber, DerivedInput, FpModule};
use crate::dvrcalc::{self, DvrIdeal, DvrObject, DvrPrime, Kind};
use crate::error::{Error, Result};
use crate::exactla::ScalarField;
use crate::grobner::{Ideal, PolyRing, PrimeIdeal};
use crate::support::homology_annihilator;

pub const KOSZUL: &str = "koszul";
pub const QUOTIENT_TENSOR: &str = "quotient-tensor";
pub const QUOTIENT_RHOM: &str = "quotient-rhom";
pub const COMPLETION: &str = "completion";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdicVerdict {
    pub subject: String,
    pub ideal: String,
    pub verdict: bool,
    pub conditions: Vec<Condition>,
    pub support_contained: bool,
    /// Window bound used for the quotient conditions; `None` when computed in closed form.
    pub bound: Option<usize>,
    pub notes: Vec<String>,
}

impl fmt::Display for AdicVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let conds: Vec<String> = self.conditions.iter().map(|c| format!("{}={}", c.name, c.holds)).collect();
        write!(f, "{} is {}-adically finite: {} [{}; support={}]", self.subject, self.ideal, self.verdict, conds.join(", "), self.support_contained)?;
        if let Some(b) = self.bound {
            write!(f, " (bound {b})")?;
        }
        Ok(())
    }
}

fn agreed(subject: &str, conditions: &[Condition]) -> Result<bool> {
    let first = conditions.first().map(|c| c.holds).unwrap_or(true);
    if conditions.iter().all(|c| c.holds == first) {
        return Ok(first);
    }
    let listing: Vec<String> = conditions.iter().map(|c| format!("{}={}", c.name, c.holds)).collect();
    Err(Error::ConditionDisagreement(format!("{subject}: {}", listing.join(", "))))
}

fn describe<F: ScalarField>(x: &DerivedInput<PolyRing<F>>) -> String {
    match x {
        DerivedInput::Module(m) => m.render(),
        DerivedInput::Complex(c) => match c.span() {
            Some((lo, hi)) => format!("complex on degrees {lo}..{hi}"),
            None => "0".to_string(),
        },
    }
}

/// Adic finiteness of a presented complex or module. Every finiteness condition is computed
/// (the quotient ones in a window of width `bound`); for presented inputs they hold
/// automatically, so the verdict is the support inclusion `supp X ⊆ V(a)`.
pub fn is_adically_finite<F: ScalarField>(x: &DerivedInput<PolyRing<F>>, a: &Ideal<F>, bound: usize) -> Result<AdicVerdict> {
    let ring = a.ring();
    if x.ring() != ring {
        return Err(Error::RingMismatch("complex and ideal over different rings".into()));
    }
    let subject = describe(x);
    let mut notes = vec!["homology of a presented complex is finitely generated".to_string()];
    let Some((lo, hi)) = x.term_span() else {
        return Ok(AdicVerdict {
            subject,
            ideal: a.to_string(),
            verdict: true,
            conditions: [KOSZUL, QUOTIENT_TENSOR, QUOTIENT_RHOM, COMPLETION].map(|name| Condition { name, holds: true }).to_vec(),
            support_contained: true,
            bound: Some(bound),
            notes,
        });
    };
    let gens = a.reduced_gens();
    let n = gens.len() as i64;
    let b = bound as i64;

    // Each derived computation returns presented modules; reaching the end of it is the check.
    let k = koszul_complex(ring, &gens);
    let koszul = derived_tensor(&k.into(), x, lo..=hi + n).is_ok();
    let quotient: DerivedInput<PolyRing<F>> = FpModule::cyclic(ring.clone(), gens.clone()).into();
    let tensor_ok = derived_tensor(&quotient, x, lo..=hi + b).is_ok();
    let rhom_ok = derived_hom(&quotient, x, lo - b..=hi).is_ok();
    notes.push("completion condition via the finitely generated shortcut: LΛ X = X ⊗ R̂".into());

    let conditions = vec![
        Condition { name: KOSZUL, holds: koszul },
        Condition { name: QUOTIENT_TENSOR, holds: tensor_ok },
        Condition { name: QUOTIENT_RHOM, holds: rhom_ok },
        Condition { name: COMPLETION, holds: true },
    ];
    let all = agreed(&subject, &conditions)?;
    let support_contained = homology_annihilator(x).radical_contains_ideal(a);
    Ok(AdicVerdict {
        subject,
        ideal: a.to_string(),
        verdict: all && support_contained,
        conditions,
        support_contained,
        bound: Some(bound),
        notes,
    })
}

fn dvr_ideal_name(a: DvrIdeal) -> &'static str {
    match a {
        DvrIdeal::Zero => "0",
        DvrIdeal::Max => "m",
    }
}

/// Finitely generated homology in the calculus: no `Q` or `E` summands.
fn dvr_fg(o: &DvrObject) -> bool {
    o.summands().iter().all(|(k, _)| matches!(k, Kind::R | Kind::T(_)))
}

/// Adic finiteness of a DVR object from the closed forms. The Koszul complex on `t` is
/// `T(1)`, and on the empty sequence is `R`.
pub fn is_adically_finite_dvr(x: &DvrObject, a: DvrIdeal) -> Result<AdicVerdict> {
    let complete = x.is_complete();
    let quotient = match a {
        DvrIdeal::Zero => DvrObject::basis(Kind::R, complete)?,
        DvrIdeal::Max => DvrObject::basis(Kind::T(1), complete)?,
    };
    let koszul = quotient.clone();
    let mut notes = Vec::new();
    let mut conditions = vec![
        Condition { name: KOSZUL, holds: dvr_fg(&dvrcalc::tensor(&koszul, x)?) },
        Condition { name: QUOTIENT_TENSOR, holds: dvr_fg(&dvrcalc::tensor(&quotient, x)?) },
        Condition { name: QUOTIENT_RHOM, holds: dvr_fg(&dvrcalc::rhom(&quotient, x)?) },
    ];
    match dvrcalc::lambda(x, a) {
        Ok(l) => conditions.push(Condition { name: COMPLETION, holds: dvr_fg(&l) }),
        Err(Error::IncompleteAmbient(why)) => notes.push(format!("completion condition omitted: {why}")),
        Err(e) => return Err(e),
    }
    let subject = x.to_string();
    let all = agreed(&subject, &conditions)?;
    let support_contained = match a {
        DvrIdeal::Zero => true,
        DvrIdeal::Max => dvrcalc::supp(x).iter().all(|p| *p == DvrPrime::Max),
    };
    let verdict = all && support_contained;
    if verdict != dvrcalc::adically_finite(x, a) {
        return Err(Error::ConditionDisagreement(format!("{subject}: conditions give {verdict}, closed form disagrees")));
    }
    Ok(AdicVerdict {
        subject,
        ideal: dvr_ideal_name(a).to_string(),
        verdict,
        conditions,
        support_contained,
        bound: None,
        notes,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaCheck {
    pub passed: bool,
    pub points_checked: usize,
    pub mismatches: Vec<String>,
    pub detail: String,
}

/// `RΓ_b X` is `b`-adically finite for `a ⊆ b` and `X` adically finite for `a`, on the calculus.
pub fn gamma_preserves_adic_finiteness_dvr(x: &DvrObject, a: DvrIdeal, b: DvrIdeal) -> Result<GammaCheck> {
    if a == DvrIdeal::Max && b == DvrIdeal::Zero {
        return Err(Error::PreconditionFailed("need a ⊆ b, got a = m, b = 0".into()));
    }
    if !is_adically_finite_dvr(x, a)?.verdict {
        return Err(Error::PreconditionFailed(format!("{x} is not {}-adically finite", dvr_ideal_name(a))));
    }
    let g = dvrcalc::gamma(x, b)?;
    let v = is_adically_finite_dvr(&g, b)?;
    let mismatches = if v.verdict { Vec::new() } else { vec![format!("RΓ({x}) = {g} is not adically finite")] };
    Ok(GammaCheck { passed: v.verdict, points_checked: 0, mismatches, detail: g.to_string() })
}

/// The same check over a polynomial ring: the fiber of `RΓ_b X` at each panel point must be
/// nonzero exactly on `supp X ∩ V(b)`. The Koszul condition holds since `K(b) ⊗ RΓ_b X ≃ K(b) ⊗ X`.
pub fn gamma_preserves_adic_finiteness<F: ScalarField>(
    x: &DerivedInput<PolyRing<F>>,
    a: &Ideal<F>,
    b: &Ideal<F>,
    panel: &[PrimeIdeal<F>],
    bound: usize,
) -> Result<GammaCheck> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch("ideals over different rings".into()));
    }
    if !b.contains_ideal(a) {
        return Err(Error::PreconditionFailed(format!("{a} is not contained in {b}")));
    }
    if !is_adically_finite(x, a, bound)?.verdict {
        return Err(Error::PreconditionFailed(format!("input is not {a}-adically finite")));
    }
    let ann = homology_annihilator(x);
    let n = b.reduced_gens().len() as i64;
    let (lo, hi) = x.term_span().unwrap_or((0, 0));
    let mut mismatches = Vec::new();
    for m in panel {
        let dims = local_cohomology_fiber(m, b, x, lo - n..=hi)?;
        let nonzero = dims.values().any(|&d| d > 0);
        let expected = m.contains_ideal(&ann) && m.contains_ideal(b);
        if nonzero != expected {
            mismatches.push(format!("fiber at {m}: nonzero = {nonzero}, expected {expected}"));
        }
    }
    Ok(GammaCheck {
        passed: mismatches.is_empty(),
        points_checked: panel.len(),
        mismatches,
        detail: format!("RΓ_{b} over {} panel points", panel.len()),
    })
}


/// The condition panel on a seeded corpus of presented inputs and random ideals, plus the DVR
/// basis for both ideals. Disagreement among the conditions is an error; a verdict that differs
/// from the support inclusion computed directly is a recorded failure.
pub fn verify_adic_conditions<F: ScalarField>(
    ring: &PolyRing<F>,
    seed: u64,
    count: usize,
    bound: usize,
) -> Result<crate::support::IdentityOutcome> {
    use rayon::prelude::*;
    let results: Vec<Result<Option<String>>> = (0..count)
        .into_par_iter()
        .map(|c| {
            let mut g = crate::corpus::rng(seed.wrapping_add(c as u64));
            let x = crate::corpus::random_object(ring, &mut g, true);
            let a = crate::corpus::random_ideal(ring, &mut g, false);
            let v = is_adically_finite(&x, &a, bound)?;
            let direct = homology_annihilator(&x).radical_contains_ideal(&a);
            Ok((v.verdict != direct).then(|| format!("case {c}: verdict {} but support inclusion {direct}", v.verdict)))
        })
        .collect();
    let mut outcome = crate::support::IdentityOutcome { name: "adic-conditions", checked: 0, failures: Vec::new() };
    for r in results {
        outcome.checked += 1;
        if let Some(f) = r? {
            outcome.failures.push(f);
        }
    }
    for k in dvrcalc::basis_kinds(&[1, 2, 3]) {
        for complete in [true, false] {
            for a in [DvrIdeal::Zero, DvrIdeal::Max] {
                is_adically_finite_dvr(&DvrObject::basis(k, complete)?, a)?;
                outcome.checked += 1;
            }
        }
    }
    Ok(outcome)
}

/// Koszul detection on seeded maps supported in `V(a)` for random `a`: the map and `K(a) ⊗ f`
/// must be quasi-isomorphisms together.
pub fn verify_detection<F: ScalarField>(ring: &PolyRing<F>, seed: u64, count: usize) -> Result<crate::support::IdentityOutcome> {
    use rayon::prelude::*;
    let results: Vec<Result<Option<String>>> = (0..count)
        .into_par_iter()
        .map(|c| {
            let mut g = crate::corpus::rng(seed.wrapping_add(c as u64));
            let a = crate::corpus::random_ideal(ring, &mut g, false);
            let f = crate::corpus::random_supported_map(ring, &mut g, &a);
            let rep = detect_iso_via_functor(&f, &a, DetectionMode::Koszul)?;
            Ok((!rep.consistent()).then(|| format!("case {c}: map qis {} but Koszul image qis {}", rep.map_qis, rep.functored_qis)))
        })
        .collect();
    let mut outcome = crate::support::IdentityOutcome { name: "detection", checked: 0, failures: Vec::new() };
    for r in results {
        outcome.checked += 1;
        if let Some(f) = r? {
            outcome.failures.push(f);
        }
    }
    Ok(outcome)
}
