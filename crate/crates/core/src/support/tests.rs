use super::*;
use crate::complexes::{koszul_complex, ChainComplex};
use crate::exactla::{PrimeField, RationalField};
use crate::grobner::MonomialOrder;
use crate::ring::Ring;

fn ring(vars: &[&str]) -> PolyRing<RationalField> {
    PolyRing::new(RationalField, vars.iter().map(|s| s.to_string()).collect(), MonomialOrder::Grevlex).unwrap()
}

fn cyclic(r: &PolyRing<RationalField>, gens: &[&str]) -> FpModule<PolyRing<RationalField>> {
    FpModule::cyclic(r.clone(), gens.iter().map(|g| r.parse(g).unwrap()).collect())
}

fn prime(r: &PolyRing<RationalField>, gens: &[&str]) -> PrimeIdeal<RationalField> {
    PrimeIdeal::certify(Ideal::parse(r, gens).unwrap()).unwrap()
}

fn v(r: &PolyRing<RationalField>, gens: &[&str]) -> SupportSet<RationalField> {
    SupportSet::closed(Ideal::parse(r, gens).unwrap())
}

#[test]
fn small_support_of_finitely_generated_inputs() {
    let r = ring(&["x", "y"]);
    let s = supp_fg(&cyclic(&r, &["x*y"]).into());
    assert!(closed_set_equal(&s, &v(&r, &["x*y"])).unwrap());
    let k = koszul_complex(&r, &[r.var(0), r.var(1)]);
    assert!(closed_set_equal(&supp_fg(&k.into()), &v(&r, &["x", "y"])).unwrap());
    assert!(supp_fg(&ChainComplex::zero(r.clone()).into()).is_empty());
}

#[test]
fn membership_examples() {
    let r = ring(&["x", "y"]);
    let m = supp_membership(&prime(&r, &["x", "y"]), &cyclic(&r, &["x"]).into()).unwrap();
    assert_eq!(m.member, Membership::Yes);
    assert!(m.witness.is_some());
    let r1 = ring(&["x"]);
    let no = supp_membership(&prime(&r1, &["x - 1"]), &cyclic(&r1, &["x"]).into()).unwrap();
    assert_eq!(no.member, Membership::No);
    let zero = supp_membership(&prime(&r1, &["x"]), &FpModule::zero(r1.clone()).into()).unwrap();
    assert_eq!(zero.member, Membership::No);
}

#[test]
fn cosupport_at_maximal_ideals() {
    let r = ring(&["x"]);
    let unit: crate::derived::DerivedInput<_> = FpModule::free(r.clone(), 1).into();
    let yes = cosupp_membership_maximal(&prime(&r, &["x"]), &unit, 3).unwrap();
    assert_eq!(yes.member, Membership::Yes);
    assert_eq!(yes.witness.unwrap().degree, -1);
    let no = cosupp_membership_maximal(&prime(&r, &["x"]), &cyclic(&r, &["x - 1"]).into(), 3).unwrap();
    assert_eq!(no.member, Membership::No);
    assert!(matches!(
        cosupp_membership_maximal(&prime(&r, &["x^2 + 1"]), &unit, 0),
        Ok(MembershipVerdict { member: Membership::UndetectedUpTo(0), .. })
    ));
    let not_max = PrimeIdeal::certify(Ideal::zero(&r)).unwrap();
    assert!(matches!(cosupp_membership_maximal(&not_max, &unit, 3), Err(Error::NotMaximal(_))));
}

#[test]
fn cosupport_bound_is_reported_over_quotient_rings() {
    let r = ring(&["x"]).quotient(&[ring(&["x"]).parse("x^2").unwrap()]).unwrap();
    let m = PrimeIdeal::certify(Ideal::parse(&r, &["x"]).unwrap()).unwrap();
    let residue = FpModule::cyclic(r.clone(), vec![r.var(0)]);
    let v = cosupp_membership_maximal(&m, &FpModule::cyclic(r.clone(), vec![r.one()]).into(), 2).unwrap();
    assert_eq!(v.member, Membership::UndetectedUpTo(2));
    assert_eq!(cosupp_membership_maximal(&m, &residue.into(), 2).unwrap().member, Membership::Yes);
}

#[test]
fn closed_set_comparisons() {
    let r = ring(&["x", "y"]);
    assert!(closed_set_equal(&v(&r, &["x^2"]), &v(&r, &["x"])).unwrap());
    assert!(!closed_set_equal(&v(&r, &["x"]), &v(&r, &["y"])).unwrap());
    assert!(closed_set_equal(&v(&r, &["x^2*y", "x*y^2"]), &v(&r, &["x*y"])).unwrap());
    let other = ring(&["x"]);
    assert!(closed_set_equal(&v(&r, &["x"]), &v(&other, &["x"])).is_err());
}

#[test]
fn bass_numbers_examples() {
    let r = ring(&["x"]);
    let rr = FpModule::free(r.clone(), 1);
    let zero = PrimeIdeal::certify(Ideal::zero(&r)).unwrap();
    assert_eq!(bass_numbers(&zero, &rr, 0..=2).unwrap().into_values().collect::<Vec<_>>(), vec![1, 0, 0]);
    assert_eq!(bass_numbers(&prime(&r, &["x"]), &rr, 0..=2).unwrap().into_values().collect::<Vec<_>>(), vec![0, 1, 0]);
    let r2 = ring(&["x", "y"]);
    let k = cyclic(&r2, &["x", "y"]);
    assert_eq!(bass_numbers(&prime(&r2, &["x", "y"]), &k, 0..=0).unwrap()[&0], 1);
    let m = cyclic(&r2, &["x"]);
    assert!(bass_numbers(&prime(&r2, &["y"]), &m, 0..=3).unwrap().values().all(|&b| b == 0));
    let lin = prime(&r2, &["x + y - 1"]);
    assert!(matches!(bass_numbers(&lin, &m, 0..=1), Err(Error::NotCertifiable(_))));
}

#[test]
fn panel_has_twelve_maximal_points() {
    let r = ring(&["x", "y"]);
    let panel = maximal_panel(&r, &[0..=3, 0..=2]).unwrap();
    assert_eq!(panel.len(), 12);
    assert!(panel.iter().all(|p| p.is_maximal()));
}

#[test]
fn identity_suite_small_run() {
    let r = ring(&["x", "y"]);
    let report = verify_support_identities(&r, SupportSuite { seed: 7, count: 3 }).unwrap();
    for o in &report.outcomes {
        assert!(o.passed(), "{}: {:?}", o.name, o.failures);
        assert_eq!(o.checked, 3);
    }
    let fp = PolyRing::new(PrimeField::new(32003).unwrap(), vec!["x".into(), "y".into()], MonomialOrder::Grevlex).unwrap();
    assert!(verify_support_identities(&fp, SupportSuite { seed: 7, count: 2 }).unwrap().all_pass());
}

#[test]
fn cosupport_refusals() {
    let r = ring(&["x", "y"]);
    let zero = PrimeIdeal::certify(Ideal::zero(&r)).unwrap();
    let unit = ChainComplex::unit(r.clone()).into();
    assert!(matches!(cosupp_membership(&zero, &unit, 4), Err(Error::NotCertifiable(_))));
    let x = prime(&r, &["x"]);
    assert!(matches!(cosupp_membership(&x, &unit, 4), Err(Error::NotCertifiable(_))));
    let m = prime(&r, &["x", "y"]);
    assert_eq!(cosupp_membership(&m, &unit, 4).unwrap().member, Membership::Yes);
    assert!(matches!(cosupp_set(&unit), Err(Error::NotTabulated(_))));

    let line = ring(&["x"]);
    let generic = PrimeIdeal::certify(Ideal::zero(&line)).unwrap();
    let q = ChainComplex::unit(line.clone()).into();
    assert!(matches!(cosupp_membership(&generic, &q, 4), Err(Error::NotCertifiable(_))));
}
