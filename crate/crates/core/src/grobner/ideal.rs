use std::fmt;
use std::sync::{Arc, OnceLock};

use super::monomial::{Monomial, MonomialOrder};
use super::poly::{Poly, PolyRing};
use crate::error::{Error, Result};
use crate::exactla::ScalarField;
use crate::ring::Ring;

/// An ideal of `k[x]/I`, stored by generators with a lazily computed Gröbner basis
/// of its preimage in `k[x]`.
#[derive(Debug, Clone)]
pub struct Ideal<F: ScalarField> {
    ring: PolyRing<F>,
    gens: Vec<Poly<F::Elem>>,
    gb: Arc<OnceLock<Vec<Poly<F::Elem>>>>,
}

impl<F: ScalarField> PartialEq for Ideal<F> {
    /// Equality as ideals.
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.groebner_basis() == other.groebner_basis()
    }
}

fn fresh_name(ring_vars: &[String], base: &str) -> String {
    let mut name = base.to_string();
    while ring_vars.contains(&name) {
        name.push('_');
    }
    name
}

impl<F: ScalarField> Ideal<F> {
    pub fn new(ring: &PolyRing<F>, gens: Vec<Poly<F::Elem>>) -> Self {
        let gens = gens.iter().map(|g| ring.reduce(g)).filter(|g| !g.is_zero()).collect();
        Ideal { ring: ring.clone(), gens, gb: Arc::new(OnceLock::new()) }
    }

    pub fn zero(ring: &PolyRing<F>) -> Self {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: &PolyRing<F>) -> Self {
        Ideal::new(ring, vec![ring.one()])
    }

    pub fn parse(ring: &PolyRing<F>, gens: &[&str]) -> Result<Self> {
        let g = gens.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(ring, g))
    }

    /// The ideal generated by a set of variables.
    pub fn of_vars(ring: &PolyRing<F>, vars: &[usize]) -> Self {
        Ideal::new(ring, vars.iter().map(|&i| ring.var(i)).collect())
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly<F::Elem>] {
        &self.gens
    }

    /// Reduced Gröbner basis of the preimage in the free polynomial ring.
    pub fn groebner_basis(&self) -> &[Poly<F::Elem>] {
        self.gb.get_or_init(|| {
            let mut all = self.gens.clone();
            all.extend(self.ring.relations().iter().cloned());
            self.ring.free().ideal_gb(&all)
        })
    }

    /// Gröbner basis elements that are not already zero in the ring.
    pub fn reduced_gens(&self) -> Vec<Poly<F::Elem>> {
        self.groebner_basis().iter().map(|g| self.ring.reduce(g)).filter(|g| !g.is_zero()).collect()
    }

    pub fn normal_form(&self, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.ring.free().normal_form(f, self.groebner_basis())
    }

    pub fn contains(&self, f: &Poly<F::Elem>) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().iter().any(|g| g.is_constant())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.groebner_basis().iter().all(|g| g.is_monomial())
    }

    fn check_ring(&self, other: &Ideal<F>) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!("{} vs {}", self.ring.describe(), other.ring.describe())));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_ring(other)?;
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ok(Ideal::new(&self.ring, g))
    }

    pub fn product(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_ring(other)?;
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                g.push(self.ring.mul(a, b));
            }
        }
        Ok(Ideal::new(&self.ring, g))
    }

    /// `I ∩ J` by eliminating `t` from `t*I + (1 - t)*J` in a lex order with `t` first.
    pub fn intersection(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::new(&self.ring, self.ring.relations().to_vec()));
        }
        let free = self.ring.free();
        let t_name = fresh_name(free.vars(), "_t");
        let big = free.with_extra_vars(&[&t_name], true, MonomialOrder::Lex);
        let n = free.nvars();
        let into: Vec<Option<usize>> = std::iter::once(None).chain((0..n).map(Some)).collect();
        let t = big.var(0);
        let one_minus_t = big.sub(&big.one(), &t);
        let rels = self.ring.relations();
        let mut gens = Vec::new();
        for g in self.gens.iter().chain(rels) {
            gens.push(big.mul(&t, &free.transfer(g, &big, &into)));
        }
        for g in other.gens.iter().chain(rels) {
            gens.push(big.mul(&one_minus_t, &free.transfer(g, &big, &into)));
        }
        let gb = big.ideal_gb(&gens);
        let back: Vec<Option<usize>> = (1..=n).map(Some).collect();
        let kept = gb.iter().filter(|g| g.terms().iter().all(|(m, _)| m.exps()[0] == 0));
        let out = kept.map(|g| big.transfer(g, &free, &back)).collect();
        Ok(Ideal::new(&self.ring, out))
    }

    /// `(I : J) = ∩_g (I : g)` over the generators `g` of `J`.
    pub fn quotient(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_ring(other)?;
        let mut acc: Option<Ideal<F>> = None;
        for g in &other.gens {
            let q = self.quotient_by_element(g);
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersection(&q)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// `(I : g) = (1/g) * (I ∩ (g))`, computed on preimages in the free ring.
    pub fn quotient_by_element(&self, g: &Poly<F::Elem>) -> Ideal<F> {
        let g = self.ring.reduce(g);
        if g.is_zero() || self.contains(&g) {
            return Ideal::unit(&self.ring);
        }
        let free = self.ring.free();
        let lifted = Ideal::new(&free, self.groebner_basis().to_vec());
        let principal = Ideal::new(&free, vec![g.clone()]);
        let inter = lifted.intersection(&principal).expect("same ring");
        let gens = inter
            .gens
            .iter()
            .map(|h| free.divide_exact(h, &g).expect("elements of (g) are divisible by g"))
            .collect();
        Ideal::new(&self.ring, gens)
    }

    /// `I : J^∞`, iterating quotients until two consecutive steps agree.
    pub fn saturation(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_ring(other)?;
        let mut cur = self.clone();
        loop {
            let next = cur.quotient(other)?;
            if cur.contains_ideal(&next) {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Whether `f` lies in the radical, by testing `1 ∈ I + (1 - t*f)` with a fresh variable `t`.
    pub fn radical_contains(&self, f: &Poly<F::Elem>) -> bool {
        let f = self.ring.reduce(f);
        if f.is_zero() {
            return true;
        }
        let free = self.ring.free();
        let t_name = fresh_name(free.vars(), "_t");
        let big = free.with_extra_vars(&[&t_name], false, MonomialOrder::Grevlex);
        let n = free.nvars();
        let into: Vec<Option<usize>> = (0..n).map(Some).chain(std::iter::once(None)).collect();
        let mut gens: Vec<Poly<F::Elem>> =
            self.groebner_basis().iter().map(|g| free.transfer(g, &big, &into)).collect();
        let tf = big.mul(&big.var(n), &free.transfer(&f, &big, &into));
        gens.push(big.sub(&big.one(), &tf));
        big.ideal_gb(&gens).iter().any(|g| g.is_constant())
    }

    /// `other ⊆ √self`.
    pub fn radical_contains_ideal(&self, other: &Ideal<F>) -> bool {
        other.gens.iter().all(|g| self.radical_contains(g))
    }

    /// `√self = √other`, i.e. `V(self) = V(other)`.
    pub fn same_radical(&self, other: &Ideal<F>) -> bool {
        self.radical_contains_ideal(other) && other.radical_contains_ideal(self)
    }

    /// Standard monomials of the quotient when it is finite dimensional over the field.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        let gb = self.groebner_basis();
        let n = self.ring.nvars();
        if gb.iter().any(|g| g.is_constant()) {
            return Some(Vec::new());
        }
        let mut bounds = vec![None; n];
        for g in gb {
            let m = g.lm().expect("nonzero");
            let s = m.support();
            if s.len() == 1 {
                let e = m.exps()[s[0]];
                bounds[s[0]] = Some(bounds[s[0]].map_or(e, |b: u16| b.min(e)));
            }
        }
        let bounds: Vec<u16> = bounds.into_iter().collect::<Option<Vec<u16>>>()?;
        let lms: Vec<&Monomial> = gb.iter().map(|g| g.lm().expect("nonzero")).collect();
        let mut out = Vec::new();
        let mut exps = vec![0u16; n];
        loop {
            let m = Monomial::from_exps(&exps);
            if !lms.iter().any(|l| l.divides(&m)) {
                out.push(m);
            }
            let mut i = 0;
            loop {
                if i == n {
                    let o = self.ring.order();
                    out.sort_by(|a, b| o.cmp(a, b));
                    return Some(out);
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

    /// Minimal primes of a monomial ideal, as sets of variable indices, via minimal vertex covers.
    pub fn minimal_prime_var_sets(&self) -> Result<Vec<Vec<usize>>> {
        if !self.is_monomial() {
            return Err(Error::NotMonomial(self.to_string()));
        }
        let gb = self.groebner_basis();
        if gb.iter().any(|g| g.is_constant()) {
            return Ok(Vec::new());
        }
        let supports: Vec<u64> = gb
            .iter()
            .map(|g| g.lm().expect("nonzero").support().iter().fold(0u64, |acc, &i| acc | (1 << i)))
            .collect();
        let n = self.ring.nvars();
        if n > 20 {
            return Err(Error::UnsupportedIdeal("too many variables for cover enumeration".into()));
        }
        let mut subsets: Vec<u64> = (0..(1u64 << n)).collect();
        subsets.sort_by_key(|s| (s.count_ones(), (0..n).map(|i| (s >> i) & 1 == 0).collect::<Vec<_>>()));
        let mut covers: Vec<u64> = Vec::new();
        for s in subsets {
            if supports.iter().all(|sup| sup & s != 0) && !covers.iter().any(|c| c & s == *c) {
                covers.push(s);
            }
        }
        Ok(covers.into_iter().map(|c| (0..n).filter(|i| (c >> i) & 1 == 1).collect()).collect())
    }

    /// Drops generators that are implied by the others.
    pub fn minimalized(&self) -> Ideal<F> {
        let mut gens: Vec<Poly<F::Elem>> = Vec::new();
        for (i, g) in self.gens.iter().enumerate() {
            let mut others: Vec<Poly<F::Elem>> = gens.clone();
            others.extend(self.gens[i + 1..].iter().cloned());
            if !Ideal::new(&self.ring, others).contains(g) {
                gens.push(g.clone());
            }
        }
        Ideal::new(&self.ring, gens)
    }
}

impl<F: ScalarField> fmt::Display for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        let g: Vec<String> = self.gens.iter().map(|p| self.ring.render(p)).collect();
        write!(f, "({})", g.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{PrimeField, RationalField};

    fn qxy() -> PolyRing<RationalField> {
        PolyRing::new(RationalField, vec!["x".into(), "y".into()], MonomialOrder::Grevlex).unwrap()
    }

    fn gb_strings<F: ScalarField>(i: &Ideal<F>) -> Vec<String> {
        i.groebner_basis().iter().map(|g| i.ring().render(g)).collect()
    }

    #[test]
    fn groebner_examples() {
        let r = qxy();
        assert_eq!(gb_strings(&Ideal::parse(&r, &["x^2", "x*y"]).unwrap()), ["x^2", "x*y"]);
        assert_eq!(gb_strings(&Ideal::parse(&r, &["x+y", "x-y"]).unwrap()), ["x", "y"]);
        assert_eq!(gb_strings(&Ideal::parse(&r, &["1"]).unwrap()), ["1"]);
    }

    #[test]
    fn arithmetic_examples() {
        let r = qxy();
        let x = Ideal::parse(&r, &["x"]).unwrap();
        let y = Ideal::parse(&r, &["y"]).unwrap();
        assert_eq!(x.sum(&y).unwrap().to_string(), "(x, y)");
        assert_eq!(gb_strings(&x.intersection(&y).unwrap()), ["x*y"]);
        let xy = Ideal::parse(&r, &["x*y"]).unwrap();
        assert_eq!(gb_strings(&xy.quotient(&x).unwrap()), ["y"]);
        assert_eq!(gb_strings(&x.product(&y).unwrap()), ["x*y"]);
    }

    #[test]
    fn radical_examples() {
        let r = qxy();
        let x2 = Ideal::parse(&r, &["x^2"]).unwrap();
        assert!(x2.radical_contains(&r.parse("x").unwrap()));
        assert!(!x2.radical_contains(&r.parse("y").unwrap()));
        let i = Ideal::parse(&r, &["x^2*y", "x*y^2"]).unwrap();
        assert!(i.radical_contains(&r.parse("x*y").unwrap()));
        assert!(!i.radical_contains(&r.parse("x").unwrap()));
    }

    #[test]
    fn saturation_example() {
        let r = qxy();
        let i = Ideal::parse(&r, &["x^2*y"]).unwrap();
        let x = Ideal::parse(&r, &["x"]).unwrap();
        assert_eq!(gb_strings(&i.saturation(&x).unwrap()), ["y"]);
    }

    #[test]
    fn minimal_primes_examples() {
        let r = qxy();
        let mp = |g: &[&str]| Ideal::parse(&r, g).unwrap().minimal_prime_var_sets().unwrap();
        assert_eq!(mp(&["x*y"]), vec![vec![0], vec![1]]);
        assert_eq!(mp(&["x^2", "x*y"]), vec![vec![0]]);
        assert_eq!(mp(&["x", "y"]), vec![vec![0, 1]]);
        assert!(matches!(Ideal::parse(&r, &["x+y"]).unwrap().minimal_prime_var_sets(), Err(Error::NotMonomial(_))));
    }

    #[test]
    fn standard_monomials_of_artinian_quotient() {
        let r = qxy();
        let i = Ideal::parse(&r, &["x^2", "y^2", "x*y"]).unwrap();
        assert_eq!(i.standard_monomials().unwrap().len(), 3);
        assert!(Ideal::parse(&r, &["x"]).unwrap().standard_monomials().is_none());
        let m = Ideal::parse(&r, &["x - 1", "y - 2"]).unwrap();
        assert_eq!(m.standard_monomials().unwrap().len(), 1);
    }

    #[test]
    fn operations_in_a_quotient_ring() {
        let r = qxy();
        let q = r.quotient(&[r.parse("x*y").unwrap()]).unwrap();
        let x = Ideal::parse(&q, &["x"]).unwrap();
        let zero = Ideal::zero(&q);
        assert_eq!(gb_strings(&zero.quotient(&x).unwrap()), ["y"]);
        assert!(zero.radical_contains(&q.parse("x*y").unwrap()));
        assert!(!zero.radical_contains(&q.parse("x").unwrap()));
    }

    #[test]
    fn prime_field_intersection() {
        let r = PolyRing::new(PrimeField::new(32003).unwrap(), vec!["x".into(), "y".into()], MonomialOrder::Grevlex)
            .unwrap();
        let a = Ideal::parse(&r, &["x^2", "y"]).unwrap();
        let b = Ideal::parse(&r, &["x", "y^3"]).unwrap();
        assert_eq!(gb_strings(&a.intersection(&b).unwrap()), ["y^3", "x^2", "x*y"]);
    }
}
