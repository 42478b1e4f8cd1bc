use super::*;
use crate::exactla::{Integers, Matrix, RationalField};
use crate::grobner::{Ideal, MonomialOrder, PolyRing, PrimeIdeal};
use crate::ring::{ModuleAlgebra, ModuleInvariants, Ring};
use num_bigint::BigInt;

fn ring(vars: &[&str]) -> PolyRing<RationalField> {
    PolyRing::new(RationalField, vars.iter().map(|s| s.to_string()).collect(), MonomialOrder::Grevlex).unwrap()
}

fn cyclic(r: &PolyRing<RationalField>, gens: &[&str]) -> FpModule<PolyRing<RationalField>> {
    FpModule::cyclic(r.clone(), gens.iter().map(|g| r.parse(g).unwrap()).collect())
}

fn zmod(n: i64) -> FpModule<Integers> {
    FpModule::cyclic(Integers, vec![BigInt::from(n)])
}

fn pid(free_rank: usize, torsion: &[&str]) -> ModuleInvariants {
    ModuleInvariants::Pid { free_rank, torsion: torsion.iter().map(|s| s.to_string()).collect() }
}

#[test]
fn resolution_of_principal_quotient() {
    let r = ring(&["x"]);
    let b = free_resolution(&cyclic(&r, &["x"]).into(), 4);
    assert!(b.complete);
    assert_eq!(b.resolution.ranks().values().copied().collect::<Vec<_>>(), vec![1, 1]);
    assert_eq!(r.render(b.resolution.d(1).get(0, 0)), "x");
}

#[test]
fn resolution_of_residue_field_is_koszul() {
    let r = ring(&["x", "y"]);
    let b = free_resolution(&cyclic(&r, &["x", "y"]).into(), 2);
    assert!(b.complete);
    let f = &b.resolution;
    assert_eq!(f.ranks().values().copied().collect::<Vec<_>>(), vec![1, 2, 1]);
    // The unique syzygy of (x, y) is (-y, x) up to a unit.
    let d1 = f.d(1);
    let d2 = f.d(2);
    let x = d1.get(0, 0);
    let y = d1.get(0, 1);
    let koszul = Matrix::from_rows(vec![vec![r.neg(y)], vec![x.clone()]], 1).unwrap();
    assert!(r.image_contains(&d2, &koszul) && r.image_contains(&koszul, &d2));
}

#[test]
fn tor_over_integers() {
    let t = tor(&zmod(4), &zmod(6), 0..=3).unwrap();
    assert_eq!(t[&0].invariants(), pid(0, &["2"]));
    assert_eq!(t[&1].invariants(), pid(0, &["2"]));
    assert!(t[&2].is_zero() && t[&3].is_zero());
}

#[test]
fn tor_zero_is_sum_of_ideals() {
    let r = ring(&["x", "y"]);
    let t = tor(&cyclic(&r, &["x^2"]), &cyclic(&r, &["x*y", "y^3"]), 0..=0).unwrap();
    let expected = Ideal::parse(&r, &["x^2", "x*y", "y^3"]).unwrap();
    assert_eq!(t[&0].annihilator(), expected);
}

#[test]
fn tensor_with_unit_is_identity() {
    let r = ring(&["x", "y"]);
    let m = cyclic(&r, &["x*y"]);
    let unit = crate::complexes::ChainComplex::unit(r.clone());
    let t = derived_tensor(&unit.into(), &m.clone().into(), -1..=2).unwrap();
    assert_eq!(t[&0].invariants(), m.invariants());
    assert!(t.iter().filter(|(i, _)| **i != 0).all(|(_, v)| v.is_zero()));
}

#[test]
fn ext_over_integers() {
    let e = ext(&zmod(2), &FpModule::free(Integers, 1), 0..=2).unwrap();
    assert!(e[&0].is_zero());
    assert_eq!(e[&1].invariants(), pid(0, &["2"]));
    assert!(e[&2].is_zero());
    let e0 = ext(&FpModule::free(Integers, 1), &zmod(5), 0..=1).unwrap();
    assert_eq!(e0[&0].invariants(), pid(0, &["5"]));
}

#[test]
fn ext_of_residue_field_has_binomial_dimensions() {
    let r = ring(&["x", "y"]);
    let k = cyclic(&r, &["x", "y"]);
    let e = ext(&k, &k, 0..=3).unwrap();
    let dims: Vec<Option<usize>> = (0..=3).map(|i| e[&i].vector_space_dim()).collect();
    assert_eq!(dims, vec![Some(1), Some(2), Some(1), Some(0)]);
}

#[test]
fn torsion_examples() {
    let r = ring(&["x", "y"]);
    let a = Ideal::parse(&r, &["x"]).unwrap();
    let (t, incl) = torsion_submodule(&a, &cyclic(&r, &["x^2*y"])).unwrap();
    assert_eq!(t.annihilator(), Ideal::parse(&r, &["x^2"]).unwrap());
    // The inclusion lands in (y) modulo x^2 y.
    let y = Ideal::parse(&r, &["y"]).unwrap();
    assert!(incl.entries().all(|e| y.contains(e)));
    let (t2, _) = torsion_submodule(&a, &t).unwrap();
    assert_eq!(t2.invariants(), t.invariants());
    let r1 = ring(&["x"]);
    let a1 = Ideal::parse(&r1, &["x"]).unwrap();
    assert!(torsion_submodule(&a1, &FpModule::free(r1.clone(), 1)).unwrap().0.is_zero());
    let m = cyclic(&r1, &["x^2"]);
    let (whole, _) = torsion_submodule(&a1, &m).unwrap();
    assert_eq!(whole.invariants(), m.invariants());
}

#[test]
fn local_cohomology_fibers_on_the_line() {
    let r = ring(&["x"]);
    let a = Ideal::parse(&r, &["x"]).unwrap();
    let unit: DerivedInput<_> = crate::complexes::ChainComplex::unit(r.clone()).into();
    let at0 = PrimeIdeal::certify(Ideal::parse(&r, &["x"]).unwrap()).unwrap();
    let at1 = PrimeIdeal::certify(Ideal::parse(&r, &["x - 1"]).unwrap()).unwrap();
    let f0 = local_cohomology_fiber(&at0, &a, &unit, -2..=2).unwrap();
    assert_eq!(f0.values().copied().collect::<Vec<_>>(), vec![0, 0, 1, 0, 0]);
    let f1 = local_cohomology_fiber(&at1, &a, &unit, -2..=2).unwrap();
    assert!(f1.values().all(|&d| d == 0));
    let not_max = PrimeIdeal::certify(Ideal::zero(&r)).unwrap();
    assert!(matches!(local_cohomology_fiber(&not_max, &a, &unit, 0..=0), Err(crate::Error::NotMaximal(_))));
}

#[test]
fn local_cohomology_fiber_over_extension_field() {
    let r = ring(&["x"]);
    let m = PrimeIdeal::certify(Ideal::parse(&r, &["x^2 + 1"]).unwrap()).unwrap();
    let a = Ideal::parse(&r, &["x^4 - 1"]).unwrap();
    let unit: DerivedInput<_> = crate::complexes::ChainComplex::unit(r.clone()).into();
    let f = local_cohomology_fiber(&m, &a, &unit, 0..=0).unwrap();
    assert_eq!(f[&0], 1);
    let b = Ideal::parse(&r, &["x - 1"]).unwrap();
    assert_eq!(local_cohomology_fiber(&m, &b, &unit, 0..=0).unwrap()[&0], 0);
}

#[test]
fn completion_of_finitely_generated_inputs() {
    let r = ring(&["x"]);
    let a = Ideal::parse(&r, &["x"]).unwrap();
    let m = cyclic(&r, &["x"]);
    let c = derived_completion_fg(&a, &m.clone().into()).unwrap();
    assert_eq!(c[&0].module.invariants(), m.invariants());
    let c = derived_completion_fg(&a, &FpModule::free(r.clone(), 1).into()).unwrap();
    assert!(!c[&0].is_zero());
    assert!(derived_completion_fg(&Ideal::unit(&r), &m.into()).is_err());
}
