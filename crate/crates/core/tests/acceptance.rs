//! End-to-end acceptance checks. Each test prints one `criterion N: PASS|FAIL` line to stderr
//! (bypassing output capture) and then asserts, so a failure is both visible and fatal.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use suppcalc::adic::{detect_iso_via_functor, is_adically_finite, is_adically_finite_dvr, DetectionMode};
use suppcalc::complexes::{koszul_complex, ChainComplex, ChainMap};
use suppcalc::corpus::{random_integer_complex, random_object, random_supported_map, rng};
use suppcalc::derived::{derived_hom, derived_tensor, local_cohomology_fiber, tor, DerivedInput, FpModule};
use suppcalc::dvrcalc::{self, basis_kinds, cosupp, rhom, supp, tensor, DvrIdeal, DvrObject, DvrPrime, Kind, PrimeSet};
use suppcalc::exactla::{homology_invariants_field, homology_invariants_pid, Integers, Matrix, PrimeField, RationalField, ScalarField};
use suppcalc::grobner::{Ideal, MonomialOrder, PolyRing, PrimeIdeal};
use suppcalc::ring::{ModuleInvariants, Ring};
use suppcalc::support::{bass_numbers, cosupp_membership, cosupp_set, maximal_panel, verify_support_identities, SupportSuite};
use suppcalc::Error;

const SEED: u64 = 20140722;

fn report(n: u32, ok: bool, detail: &str) {
    let line = format!("criterion {n}: {} ({detail})\n", if ok { "PASS" } else { "FAIL" });
    let _ = std::io::stderr().write_all(line.as_bytes());
}

fn check(n: u32, start: Instant, limit: Duration, failures: &[String]) {
    let elapsed = start.elapsed();
    let mut all = failures.to_vec();
    if elapsed > limit {
        all.push(format!("took {elapsed:?}, limit {limit:?}"));
    }
    let detail = if all.is_empty() { format!("{elapsed:.2?}") } else { all.join("; ") };
    report(n, all.is_empty(), &detail);
    assert!(all.is_empty(), "criterion {n}: {detail}");
}

fn obj(s: &str) -> DvrObject {
    s.parse().unwrap()
}

fn primes(ps: &[DvrPrime]) -> PrimeSet {
    ps.iter().copied().collect()
}

fn qxy() -> PolyRing<RationalField> {
    PolyRing::new(RationalField, vec!["x".into(), "y".into()], MonomialOrder::Grevlex).unwrap()
}

fn expect<T: PartialEq + std::fmt::Debug>(failures: &mut Vec<String>, what: &str, got: T, want: T) {
    if got != want {
        failures.push(format!("{what}: got {got:?}, expected {want:?}"));
    }
}

#[test]
fn criterion_1_dvr_worked_example() {
    let start = Instant::now();
    let mut f = Vec::new();
    let (e, q, r) = (obj("E"), obj("Q"), obj("R"));
    // supp E = {m} and supp Q = {0} are disjoint, so E ⊗ Q = 0.
    expect(&mut f, "supp E ∩ supp Q", supp(&e).intersection(&supp(&q)).count(), 0);
    expect(&mut f, "E ⊗ Q", tensor(&e, &q).unwrap(), obj("0"));
    expect(&mut f, "E ⊗ E", tensor(&e, &e).unwrap(), obj("shift(1, E)"));
    expect(&mut f, "RHom(E, R)", rhom(&e, &r).unwrap(), obj("shift(-1, R)"));
    expect(&mut f, "RHom(E, E)", rhom(&e, &e).unwrap(), obj("R"));
    expect(&mut f, "RHom(E, Q)", rhom(&e, &q).unwrap(), obj("0"));

    let ee = rhom(&e, &e).unwrap();
    let a = tensor(&ee, &e).unwrap();
    let b = rhom(&e, &tensor(&e, &e).unwrap()).unwrap();
    let c = tensor(&e, &rhom(&e, &r).unwrap()).unwrap();
    let d = rhom(&ee, &r).unwrap();
    expect(&mut f, "RHom(E,E) ⊗ E", a.clone(), obj("E"));
    expect(&mut f, "RHom(E, E ⊗ E)", b.clone(), obj("shift(1, R)"));
    expect(&mut f, "E ⊗ RHom(E,R)", c.clone(), obj("shift(-1, E)"));
    expect(&mut f, "RHom(RHom(E,E), R)", d.clone(), obj("R"));
    if a == b {
        f.push("tensor evaluation should fail to be an isomorphism".into());
    }
    if c == d {
        f.push("Hom evaluation should fail to be an isomorphism".into());
    }
    check(1, start, Duration::from_secs(1), &f);
}

#[test]
fn criterion_2_cosupport_catalog() {
    let start = Instant::now();
    let mut f = Vec::new();
    let both = primes(&[DvrPrime::Zero, DvrPrime::Max]);
    let e = obj("E");
    expect(&mut f, "supp E", supp(&e), primes(&[DvrPrime::Max]));
    expect(&mut f, "cosupp E", cosupp(&e), both.clone());
    let r_complete = DvrObject::basis(Kind::R, true).unwrap();
    let r_incomplete = DvrObject::basis(Kind::R, false).unwrap();
    expect(&mut f, "cosupp R (complete)", cosupp(&r_complete), primes(&[DvrPrime::Max]));
    expect(&mut f, "cosupp R (incomplete)", cosupp(&r_incomplete), both);
    for k in basis_kinds(&[1, 2, 3, 5]) {
        for s in [-1, 0, 2] {
            let x = DvrObject::basis(k, true).unwrap().shift(s);
            let dual = rhom(&x, &e).unwrap();
            expect(&mut f, &format!("cosupp RHom({x}, E)"), cosupp(&dual), supp(&x));
        }
    }
    check(2, start, Duration::from_secs(1), &f);
}

fn support_suite<F: ScalarField>(ring: &PolyRing<F>, f: &mut Vec<String>) {
    let rep = verify_support_identities(ring, SupportSuite { seed: SEED, count: 25 }).unwrap();
    for o in &rep.outcomes {
        if o.checked == 0 {
            f.push(format!("{} over {}: nothing checked", o.name, rep.ring));
        }
        for fail in &o.failures {
            f.push(format!("{} over {}: {fail}", o.name, rep.ring));
        }
    }
    for name in ["tensor", "rhom", "cone", "minimal-primes"] {
        if !rep.outcomes.iter().any(|o| o.name == name) {
            f.push(format!("identity {name} missing"));
        }
    }
}

#[test]
fn criterion_3_support_identities() {
    let start = Instant::now();
    let mut f = Vec::new();
    let fp = PolyRing::new(PrimeField::new(32003).unwrap(), vec!["x".into(), "y".into()], MonomialOrder::Grevlex).unwrap();
    support_suite(&fp, &mut f);
    support_suite(&qxy(), &mut f);
    check(3, start, Duration::from_secs(120), &f);
}

#[test]
fn criterion_4_local_cohomology_support() {
    let start = Instant::now();
    let mut f = Vec::new();
    let q = qxy();
    let panel = maximal_panel(&q, &[0..=3, 0..=2]).unwrap();
    expect(&mut f, "panel size", panel.len(), 12);
    let unit: DerivedInput<_> = ChainComplex::unit(q.clone()).into();
    for gens in [&["x"][..], &["x", "y"], &["x*y"]] {
        let a = Ideal::parse(&q, gens).unwrap();
        for (i, m) in panel.iter().enumerate() {
            let (px, py) = ((i / 3) as i64, (i % 3) as i64);
            // The point (px, py) lies in V(a) iff every generator vanishes there.
            let at = [Some(q.field().from_i64(px)), Some(q.field().from_i64(py))];
            let in_v = a.gens().iter().all(|g| q.substitute(g, &at).is_zero());
            let expect_point = m.ideal().contains(&q.parse(&format!("x-{px}")).unwrap())
                && m.ideal().contains(&q.parse(&format!("y-{py}")).unwrap());
            if !expect_point {
                f.push(format!("panel point {i} is not ({px}, {py})"));
            }
            let dims = local_cohomology_fiber(m, &a, &unit, -3..=1).unwrap();
            let nonzero = dims.values().any(|&d| d > 0);
            expect(&mut f, &format!("fiber of RΓ_{a} R at {m}"), nonzero, in_v);
        }
    }
    check(4, start, Duration::from_secs(30), &f);
}

fn invariants(h: &BTreeMap<i64, FpModule<PolyRing<RationalField>>>) -> BTreeMap<i64, String> {
    h.iter().filter(|(_, m)| !m.is_zero()).map(|(i, m)| (*i, m.invariants().to_string())).collect()
}

#[test]
fn criterion_5_koszul_self_duality() {
    let start = Instant::now();
    let mut f = Vec::new();
    let q = qxy();
    let gens = vec![q.parse("x").unwrap(), q.parse("y").unwrap()];
    let k: DerivedInput<_> = koszul_complex(&q, &gens).into();
    let n = gens.len() as i64;
    let mut g = rng(SEED);
    for case in 0..20 {
        let x = random_object(&q, &mut g, true);
        let (lo, hi) = x.term_span().unwrap_or((0, 0));
        let hom = invariants(&derived_hom(&k, &x, lo - n - 1..=hi + 1).unwrap());
        let ten = derived_tensor(&k, &x, lo - 1..=hi + n + 1).unwrap();
        // H_i(Σ^{-n} Y) = H_{i+n}(Y).
        let shifted: BTreeMap<i64, String> = invariants(&ten).into_iter().map(|(i, v)| (i - n, v)).collect();
        expect(&mut f, &format!("case {case}"), hom, shifted);
    }
    check(5, start, Duration::from_secs(60), &f);
}

#[test]
fn criterion_6_adic_finiteness_conditions() {
    let start = Instant::now();
    let mut f = Vec::new();
    let q = qxy();
    let ideals = [Ideal::parse(&q, &["x"]).unwrap(), Ideal::parse(&q, &["x", "y"]).unwrap(), Ideal::parse(&q, &["x*y"]).unwrap()];
    let mut g = rng(SEED + 6);
    for case in 0..20 {
        let x = random_object(&q, &mut g, true);
        let a = &ideals[case % ideals.len()];
        match is_adically_finite(&x, a, 3) {
            Ok(v) => {
                let holds: Vec<bool> = v.conditions.iter().map(|c| c.holds).collect();
                if holds.iter().any(|&h| h != holds[0]) {
                    f.push(format!("case {case}: conditions disagree {holds:?}"));
                }
            }
            Err(e) => f.push(format!("case {case}: {e}")),
        }
    }
    // 0-adic finiteness means finitely generated homology; m-adic finiteness means artinian homology.
    for k in basis_kinds(&[1, 2, 3]) {
        let fg = matches!(k, Kind::R | Kind::T(_));
        let artinian = matches!(k, Kind::E | Kind::T(_));
        for complete in [true, false] {
            let x = DvrObject::basis(k, complete).unwrap();
            for (a, want) in [(DvrIdeal::Zero, fg), (DvrIdeal::Max, artinian)] {
                match is_adically_finite_dvr(&x, a) {
                    Ok(v) => {
                        expect(&mut f, &format!("{x} at {a:?} (complete {complete})"), v.verdict, want);
                        let holds: Vec<bool> = v.conditions.iter().map(|c| c.holds).collect();
                        if holds.iter().any(|&h| h != holds[0]) {
                            f.push(format!("{x} at {a:?}: conditions disagree {holds:?}"));
                        }
                    }
                    Err(e) => f.push(format!("{x} at {a:?}: {e}")),
                }
            }
        }
    }
    let e = obj("E");
    let em = is_adically_finite_dvr(&e, DvrIdeal::Max).unwrap();
    let e0 = is_adically_finite_dvr(&e, DvrIdeal::Zero).unwrap();
    expect(&mut f, "E m-adically finite", em.verdict, true);
    expect(&mut f, "E 0-adically finite", e0.verdict, false);
    expect(&mut f, "closed form for E at m", dvrcalc::adically_finite(&e, DvrIdeal::Max), true);
    check(6, start, Duration::from_secs(120), &f);
}

#[test]
fn criterion_7_morphism_detection() {
    let start = Instant::now();
    let mut f = Vec::new();
    let q = qxy();
    let ideals = [Ideal::parse(&q, &["x"]).unwrap(), Ideal::parse(&q, &["x", "y"]).unwrap(), Ideal::parse(&q, &["x*y", "y^2"]).unwrap()];
    let mut g = rng(SEED + 7);
    let mut agree = 0;
    for case in 0..15 {
        let a = &ideals[case % ideals.len()];
        let map = random_supported_map(&q, &mut g, a);
        let rep = detect_iso_via_functor(&map, a, DetectionMode::Koszul).unwrap();
        if !rep.hypothesis {
            f.push(format!("case {case}: support not in V(a)"));
        } else if rep.agree() {
            agree += 1;
        } else {
            f.push(format!("case {case}: map qis {} but Koszul image qis {}", rep.map_qis, rep.functored_qis));
        }
    }
    expect(&mut f, "agreement count", agree, 15);

    let line = PolyRing::new(RationalField, vec!["x".into()], MonomialOrder::Grevlex).unwrap();
    let d = Matrix::from_rows(vec![vec![line.parse("x-1").unwrap()]], 1).unwrap();
    let src = ChainComplex::from_differentials(line.clone(), BTreeMap::from([(1, d)])).unwrap();
    let to_zero = ChainMap::new(src, ChainComplex::zero(line.clone()), BTreeMap::new()).unwrap();
    let rep = detect_iso_via_functor(&to_zero, &Ideal::parse(&line, &["x"]).unwrap(), DetectionMode::Koszul).unwrap();
    expect(&mut f, "counterexample map qis", rep.map_qis, false);
    expect(&mut f, "counterexample Koszul image qis", rep.functored_qis, true);
    expect(&mut f, "counterexample flagged", rep.expected_counterexample(), true);
    check(7, start, Duration::from_secs(120), &f);
}

fn torsion_values(inv: &ModuleInvariants) -> (usize, Vec<BigInt>) {
    match inv {
        ModuleInvariants::Pid { free_rank, torsion } => (*free_rank, torsion.iter().map(|t| t.parse().unwrap()).collect()),
        other => panic!("expected PID invariants, got {other:?}"),
    }
}

fn field_dim(inv: &ModuleInvariants) -> usize {
    match inv {
        ModuleInvariants::Field { dim } => *dim,
        other => panic!("expected field invariants, got {other:?}"),
    }
}

fn over<F: Ring>(field: &F, m: &Matrix<BigInt>, conv: impl Fn(&BigInt) -> F::Elem) -> Matrix<F::Elem> {
    let _ = field;
    Matrix::from_fn(m.nrows(), m.ncols(), |r, c| conv(m.get(r, c)))
}

#[test]
fn criterion_8_integer_oracles() {
    let start = Instant::now();
    let mut f = Vec::new();
    let zz = Integers;
    let mut g = rng(SEED + 8);
    let complexes: Vec<ChainComplex<Integers>> = (0..20).map(|_| random_integer_complex(&mut g)).collect();
    let f2 = PrimeField::new(2).unwrap();
    let f3 = PrimeField::new(3).unwrap();
    for (case, c) in complexes.iter().enumerate() {
        let pid: BTreeMap<i64, (usize, Vec<BigInt>)> = (-1..=3)
            .map(|i| (i, torsion_values(&homology_invariants_pid(&zz, &c.d(i + 1), &c.d(i)).unwrap())))
            .collect();
        for i in 0..=2 {
            let (rank, tors) = &pid[&i];
            let dq = field_dim(
                &homology_invariants_field(
                    &RationalField,
                    &over(&RationalField, &c.d(i + 1), |n| RationalField.from_rational(n, &BigInt::one()).unwrap()),
                    &over(&RationalField, &c.d(i), |n| RationalField.from_rational(n, &BigInt::one()).unwrap()),
                )
                .unwrap(),
            );
            expect(&mut f, &format!("case {case} H_{i} rank over QQ"), dq, *rank);
            for p in [&f2, &f3] {
                let dp = field_dim(
                    &homology_invariants_field(
                        p,
                        &over(p, &c.d(i + 1), |n| p.reduce_bigint(n)),
                        &over(p, &c.d(i), |n| p.reduce_bigint(n)),
                    )
                    .unwrap(),
                );
                // Universal coefficients: H_i(C ⊗ F_p) = H_i(C) ⊗ F_p ⊕ Tor(H_{i-1}(C), F_p).
                let modulus = BigInt::from(p.modulus());
                let divisible = |t: &Vec<BigInt>| t.iter().filter(|d| (*d % &modulus).is_zero()).count();
                let want = rank + divisible(tors) + divisible(&pid[&(i - 1)].1);
                expect(&mut f, &format!("case {case} H_{i} over F_{}", p.modulus()), dp, want);
            }
        }
    }
    // Tor balance: resolving M or resolving N gives the same groups.
    for pair in complexes.chunks(2) {
        let m = FpModule::new(zz, pair[0].d(1));
        let n = FpModule::new(zz, pair[1].d(1));
        let mn: BTreeMap<i64, String> = tor(&m, &n, 0..=2).unwrap().iter().map(|(i, t)| (*i, t.invariants().to_string())).collect();
        let nm: BTreeMap<i64, String> = tor(&n, &m, 0..=2).unwrap().iter().map(|(i, t)| (*i, t.invariants().to_string())).collect();
        expect(&mut f, &format!("Tor({}, {})", m.render(), n.render()), mn, nm);
    }
    check(8, start, Duration::from_secs(60), &f);
}

#[test]
fn criterion_9_refusals() {
    let start = Instant::now();
    let mut f = Vec::new();
    let q = qxy();
    let m: DerivedInput<_> = FpModule::cyclic(q.clone(), vec![q.parse("x").unwrap()]).into();
    let px = PrimeIdeal::certify(Ideal::parse(&q, &["x"]).unwrap()).unwrap();
    if !matches!(cosupp_membership(&px, &m, 4), Err(Error::NotCertifiable(_))) {
        f.push("co-support at a non-maximal prime was answered".into());
    }
    if !matches!(cosupp_set(&m), Err(Error::NotTabulated(_))) {
        f.push("co-support set over QQ[x,y] was answered".into());
    }
    // QQ[x] is a non-local one-dimensional domain.
    let line = PolyRing::new(RationalField, vec!["x".into()], MonomialOrder::Grevlex).unwrap();
    let unit: DerivedInput<_> = ChainComplex::unit(line.clone()).into();
    let zero = PrimeIdeal::certify(Ideal::zero(&line)).unwrap();
    if !matches!(cosupp_membership(&zero, &unit, 3), Err(Error::NotCertifiable(_))) {
        f.push("co-support at (0) over QQ[x] was answered".into());
    }
    if !matches!(cosupp_set(&unit), Err(Error::NotTabulated(_))) {
        f.push("co-support set over QQ[x] was answered".into());
    }
    let nonmonomial = PrimeIdeal::certify(Ideal::parse(&q, &["x-y"]).unwrap()).unwrap();
    let module = FpModule::free(q.clone(), 1);
    if !matches!(bass_numbers(&nonmonomial, &module, 0..=1), Err(Error::NotCertifiable(_))) {
        f.push("Bass numbers at a non-monomial non-maximal prime were answered".into());
    }
    let ee = dvrcalc::eval(&dvrcalc::parse_expr("rhom(E, E)").unwrap(), false, &BTreeMap::new());
    if !matches!(ee, Err(Error::IncompleteAmbient(_))) {
        f.push("RHom(E, E) over an incomplete DVR was answered".into());
    }
    check(9, start, Duration::from_secs(10), &f);
}
