use super::*;
use crate::derived::{ext, tor, FpModule};
use crate::exactla::{RationalField, UnivariatePolyRing};
use crate::ring::Ring;
use std::collections::BTreeMap;

fn obj(s: &str) -> DvrObject {
    s.parse().unwrap()
}

fn incomplete(s: &str) -> Result<DvrObject> {
    eval(&parse_expr(s)?, false, &BTreeMap::new())
}

fn primes(ps: &[DvrPrime]) -> PrimeSet {
    ps.iter().copied().collect()
}

/// Basis objects with a few shifts, over a complete ambient.
fn shifted_basis() -> Vec<DvrObject> {
    let mut v = Vec::new();
    for k in basis_kinds(&[1, 2, 3]) {
        for s in [-1, 0, 2] {
            v.push(DvrObject::basis(k, true).unwrap().shift(s));
        }
    }
    v
}

fn meet(a: &PrimeSet, b: &PrimeSet) -> PrimeSet {
    a.intersection(b).copied().collect()
}

#[test]
fn evaluation_maps_fail_for_e() {
    assert_eq!(tensor(&obj("E"), &obj("Q")).unwrap(), obj("0"));
    assert_eq!(tensor(&obj("E"), &obj("E")).unwrap(), obj("shift(1, E)"));
    assert_eq!(rhom(&obj("E"), &obj("R")).unwrap(), obj("shift(-1, R)"));
    assert_eq!(rhom(&obj("E"), &obj("E")).unwrap(), obj("R"));

    let e = obj("E");
    let r = obj("R");
    let ee = rhom(&e, &e).unwrap();
    let a = tensor(&ee, &e).unwrap();
    let b = rhom(&e, &tensor(&e, &e).unwrap()).unwrap();
    assert_eq!(a, obj("E"));
    assert_eq!(b, obj("shift(1, R)"));
    assert_ne!(a, b);

    let c = tensor(&e, &rhom(&e, &r).unwrap()).unwrap();
    let d = rhom(&ee, &r).unwrap();
    assert_eq!(c, obj("shift(-1, E)"));
    assert_eq!(d, obj("R"));
    assert_ne!(c, d);
}

type KT = UnivariatePolyRing<RationalField>;

/// `k[t]` stands in for the DVR on `t`-power torsion: those modules are already local and complete.
fn model(q: &KT, k: Kind) -> FpModule<KT> {
    match k {
        Kind::R => FpModule::free(q.clone(), 1),
        Kind::T(n) => FpModule::cyclic(q.clone(), vec![q.pow(&q.x(), n)]),
        _ => unreachable!("only finitely generated kinds have a k[t] model"),
    }
}

fn expected_in_degree(q: &KT, o: &DvrObject, degree: i64) -> FpModule<KT> {
    o.summands()
        .iter()
        .filter(|(_, s)| *s == degree)
        .fold(FpModule::zero(q.clone()), |acc, (k, _)| acc.direct_sum(&model(q, *k)))
}

#[test]
fn finitely_generated_entries_match_k_t_computations() {
    let q = UnivariatePolyRing::new(RationalField, "t");
    let fg: Vec<Kind> = basis_kinds(&[1, 2, 3, 4]).into_iter().filter(|k| matches!(k, Kind::R | Kind::T(_))).collect();
    for &a in &fg {
        for &b in &fg {
            let (ma, mb) = (model(&q, a), model(&q, b));
            let (oa, ob) = (DvrObject::basis(a, true).unwrap(), DvrObject::basis(b, true).unwrap());
            let t = tensor(&oa, &ob).unwrap();
            let tors = tor(&ma, &mb, 0..=3).unwrap();
            for i in 0..=3 {
                assert_eq!(tors[&i].invariants(), expected_in_degree(&q, &t, i).invariants(), "Tor_{i}({a}, {b})");
            }
            let h = rhom(&oa, &ob).unwrap();
            let exts = ext(&ma, &mb, 0..=3).unwrap();
            for i in 0..=3 {
                assert_eq!(exts[&i].invariants(), expected_in_degree(&q, &h, -i).invariants(), "Ext^{i}({a}, {b})");
            }
        }
    }
}

#[test]
fn hom_tensor_adjunction_on_all_triples() {
    let basis = shifted_basis();
    for a in &basis {
        for b in &basis {
            let ab = tensor(a, b).unwrap();
            assert_eq!(ab, tensor(b, a).unwrap(), "commutativity {a} {b}");
            for c in &basis {
                let lhs = rhom(&ab, c).unwrap();
                let rhs = rhom(a, &rhom(b, c).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "RHom({a} ⊗ {b}, {c})");
                assert_eq!(tensor(&ab, c).unwrap(), tensor(a, &tensor(b, c).unwrap()).unwrap());
            }
        }
    }
}

#[test]
fn support_identities_on_all_pairs() {
    let basis = shifted_basis();
    for x in &basis {
        for y in &basis {
            assert_eq!(supp(&tensor(x, y).unwrap()), meet(&supp(x), &supp(y)), "supp({x} ⊗ {y})");
            assert_eq!(cosupp(&rhom(x, y).unwrap()), meet(&supp(x), &cosupp(y)), "cosupp RHom({x}, {y})");
        }
    }
}

#[test]
fn torsion_and_completion_identities() {
    let m = primes(&[DvrPrime::Max]);
    for x in shifted_basis() {
        assert_eq!(supp(&gamma(&x, DvrIdeal::Max).unwrap()), meet(&supp(&x), &m), "supp Γ({x})");
        assert_eq!(cosupp(&lambda(&x, DvrIdeal::Max).unwrap()), meet(&cosupp(&x), &m), "cosupp Λ({x})");
        assert_eq!(cosupp(&rhom(&x, &obj("E")).unwrap()), supp(&x));
        assert_eq!(gamma(&x, DvrIdeal::Zero).unwrap(), x);
        assert_eq!(lambda(&x, DvrIdeal::Zero).unwrap(), x);

        let g = gamma(&x, DvrIdeal::Max).unwrap();
        let l = lambda(&x, DvrIdeal::Max).unwrap();
        assert_eq!(gamma(&g, DvrIdeal::Max).unwrap(), g);
        assert_eq!(lambda(&l, DvrIdeal::Max).unwrap(), l);
        assert_eq!(gamma(&l, DvrIdeal::Max).unwrap(), g, "ΓΛ({x})");
        assert_eq!(lambda(&g, DvrIdeal::Max).unwrap(), l, "ΛΓ({x})");
    }
}

#[test]
fn runtime_table_check_passes() {
    let out = verify_tables(&[1, 2]);
    assert_eq!(out.len(), 5);
    assert!(out.iter().all(|o| o.passed() && o.checked > 0), "{out:?}");
}

#[test]
fn gamma_and_lambda_values() {
    let g = |s: &str| gamma(&obj(s), DvrIdeal::Max).unwrap().to_string();
    let l = |s: &str| lambda(&obj(s), DvrIdeal::Max).unwrap().to_string();
    assert_eq!([g("R"), g("Q"), g("E"), g("T(2)")], ["shift(-1, E)", "0", "E", "T(2)"]);
    assert_eq!([l("R"), l("Q"), l("E"), l("T(2)")], ["R", "0", "shift(1, R)", "T(2)"]);
}

#[test]
fn matlis_duality_on_finite_length_and_free() {
    let e = obj("E");
    for s in ["R", "T(1)", "T(3)", "sum(R, shift(2, T(2)))"] {
        let x = obj(s);
        assert_eq!(rhom(&rhom(&x, &e).unwrap(), &e).unwrap(), x, "{s}");
    }
}

#[test]
fn vanishing_of_rhom_out_of_adically_finite() {
    let basis = shifted_basis();
    for m in &basis {
        if !adically_finite(m, DvrIdeal::Max) && !adically_finite(m, DvrIdeal::Zero) {
            continue;
        }
        for x in &basis {
            let vanishes = rhom(m, x).unwrap().is_zero();
            assert_eq!(vanishes, meet(&supp(m), &supp(x)).is_empty(), "RHom({m}, {x})");
        }
    }
}

#[test]
fn self_dual_adically_finite_is_supported_at_m() {
    let e = obj("E");
    assert_eq!(rhom(&e, &e).unwrap(), obj("R"));
    assert!(adically_finite(&e, DvrIdeal::Max));
    assert_eq!(supp(&e), primes(&[DvrPrime::Max]));
}

#[test]
fn supports_and_adic_finiteness() {
    let both = primes(&[DvrPrime::Zero, DvrPrime::Max]);
    assert_eq!(supp(&obj("E")), primes(&[DvrPrime::Max]));
    assert_eq!(cosupp(&obj("E")), both);
    assert_eq!(cosupp(&obj("R")), primes(&[DvrPrime::Max]));
    assert_eq!(cosupp(&incomplete("R").unwrap()), both);
    assert!(supp(&obj("0")).is_empty());
    assert_eq!(render_primes(&both), "{0, m}");
    assert!(adically_finite(&obj("E"), DvrIdeal::Max));
    assert!(!adically_finite(&obj("E"), DvrIdeal::Zero));
    assert!(adically_finite(&obj("sum(R, T(3))"), DvrIdeal::Zero));
    assert!(!adically_finite(&obj("Q"), DvrIdeal::Max));
}

#[test]
fn incomplete_ambient_blocks_only_completion_entries() {
    for s in ["rhom(E, E)", "rhom(E, R)", "rhom(Q, E)", "rhom(Q, R)", "lambda(m, R)"] {
        assert!(matches!(incomplete(s), Err(Error::IncompleteAmbient(_))), "{s}");
    }
    assert_eq!(incomplete("rhom(E, T(2))").unwrap().to_string(), "shift(-1, T(2))");
    assert_eq!(incomplete("rhom(Q, T(2))").unwrap().to_string(), "0");
    assert_eq!(incomplete("gamma(m, R)").unwrap().to_string(), "shift(-1, E)");
    let a = DvrObject::basis(Kind::E, true).unwrap();
    let b = DvrObject::basis(Kind::E, false).unwrap();
    assert!(matches!(tensor(&a, &b), Err(Error::AmbientMismatch { .. })));
}

#[test]
fn expressions_parse_and_print() {
    for s in ["0", "E", "T(3)", "shift(2, E)", "sum(R, shift(-1, T(2)))", "tensor(E, rhom(A, Q))", "gamma(m, lambda(0, R))"] {
        assert_eq!(parse_expr(s).unwrap().to_string(), s);
    }
    assert_eq!(obj("sum(shift(1, T(2)), E, R)").to_string(), "sum(R, E, shift(1, T(2)))");
    assert!(parse_expr("T(0)").is_err());
    assert!(parse_expr("tensor(E)").is_err());
    assert!(parse_expr("E E").is_err());
    let mut env = BTreeMap::new();
    env.insert("A".to_string(), obj("sum(E, shift(1, T(2)))"));
    let v = eval(&parse_expr("tensor(A, E)").unwrap(), true, &env).unwrap();
    assert_eq!(v.to_string(), "sum(shift(1, E), shift(2, T(2)))");
    assert!(eval(&parse_expr("B").unwrap(), true, &env).is_err());
}

mod props {
    use super::*;
    use proptest::prelude::*;

    fn kind() -> impl Strategy<Value = Kind> {
        prop_oneof![Just(Kind::R), Just(Kind::Q), Just(Kind::E), (1u32..5).prop_map(Kind::T)]
    }

    fn object() -> impl Strategy<Value = DvrObject> {
        prop::collection::vec((kind(), -3i64..4), 0..4).prop_map(|s| DvrObject::from_summands(s, true).unwrap())
    }

    proptest! {
        #[test]
        fn rhom_shifts_oppositely(a in object(), b in object(), n in -3i64..4) {
            let base = rhom(&a, &b).unwrap();
            prop_assert_eq!(rhom(&a.shift(n), &b).unwrap(), base.shift(-n));
            prop_assert_eq!(rhom(&a, &b.shift(n)).unwrap(), base.shift(n));
        }

        #[test]
        fn tensor_distributes_over_sums(a in object(), b in object(), c in object()) {
            let lhs = tensor(&a, &b.sum(&c).unwrap()).unwrap();
            let rhs = tensor(&a, &b).unwrap().sum(&tensor(&a, &c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn printing_round_trips(a in object()) {
            prop_assert_eq!(a.to_string().parse::<DvrObject>().unwrap(), a);
        }
    }
}
