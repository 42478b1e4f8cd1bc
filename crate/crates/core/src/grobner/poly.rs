use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use super::gb::{Engine, VTerm};
use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::exactla::{ScalarField, UPoly, UnivariatePolyRing};
use crate::ring::{Field, Ring};

/// Polynomial with terms sorted by decreasing monomial (ring order), no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    terms: Vec<(Monomial, E)>,
}

impl<E: Clone> Poly<E> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[(Monomial, E)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, E)> {
        self.terms.first()
    }

    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    /// Variables occurring in some term.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.terms.iter().flat_map(|t| t.0.support()).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    pub(crate) fn into_vterms(self, pos: u32) -> Vec<VTerm<E>> {
        self.terms.into_iter().map(|(m, c)| (pos, m, c)).collect()
    }

    pub(crate) fn from_vterms(v: Vec<VTerm<E>>) -> Self {
        Poly { terms: v.into_iter().map(|(_, m, c)| (m, c)).collect() }
    }
}

#[derive(Debug)]
struct Inner<F: ScalarField> {
    field: F,
    vars: Vec<String>,
    order: MonomialOrder,
    /// Reduced Gröbner basis of the defining ideal (empty for a polynomial ring).
    relations: Vec<Poly<F::Elem>>,
}

/// `k[x_1..x_n] / I` over `k = QQ` or `F_p`, with a fixed monomial order.
#[derive(Debug, Clone)]
pub struct PolyRing<F: ScalarField> {
    inner: Arc<Inner<F>>,
}

impl<F: ScalarField> PartialEq for PolyRing<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.field == other.inner.field
                && self.inner.vars == other.inner.vars
                && self.inner.order == other.inner.order
                && self.inner.relations == other.inner.relations)
    }
}

impl<F: ScalarField> PolyRing<F> {
    pub fn new(field: F, vars: Vec<String>, order: MonomialOrder) -> Result<Self> {
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::Malformed(format!("variable {v} declared twice")));
            }
            if v.is_empty() || !v.chars().next().unwrap().is_alphabetic() && !v.starts_with('_') {
                return Err(Error::Malformed(format!("bad variable name {v:?}")));
            }
        }
        Ok(PolyRing { inner: Arc::new(Inner { field, vars, order, relations: Vec::new() }) })
    }

    /// The quotient of the underlying polynomial ring by `rels` (together with existing relations).
    pub fn quotient(&self, rels: &[Poly<F::Elem>]) -> Result<Self> {
        let free = self.free();
        let mut all: Vec<Poly<F::Elem>> = self.inner.relations.clone();
        all.extend(rels.iter().cloned());
        let gb = free.ideal_gb(&all);
        if gb.iter().any(|g| g.is_constant()) {
            return Err(Error::UnsupportedRing("relations generate the unit ideal".into()));
        }
        Ok(PolyRing {
            inner: Arc::new(Inner {
                field: self.inner.field.clone(),
                vars: self.inner.vars.clone(),
                order: self.inner.order,
                relations: gb,
            }),
        })
    }

    /// Same variables and order, no relations.
    pub fn free(&self) -> Self {
        if self.inner.relations.is_empty() {
            return self.clone();
        }
        PolyRing {
            inner: Arc::new(Inner {
                field: self.inner.field.clone(),
                vars: self.inner.vars.clone(),
                order: self.inner.order,
                relations: Vec::new(),
            }),
        }
    }

    /// Free ring on the same variables with another order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        PolyRing {
            inner: Arc::new(Inner {
                field: self.inner.field.clone(),
                vars: self.inner.vars.clone(),
                order,
                relations: Vec::new(),
            }),
        }
    }

    /// Free ring with the given variables prepended (`front`) or appended.
    pub fn with_extra_vars(&self, names: &[&str], front: bool, order: MonomialOrder) -> Self {
        let mut vars: Vec<String> = Vec::new();
        let extra: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        if front {
            vars.extend(extra);
            vars.extend(self.inner.vars.iter().cloned());
        } else {
            vars.extend(self.inner.vars.iter().cloned());
            vars.extend(extra);
        }
        PolyRing {
            inner: Arc::new(Inner { field: self.inner.field.clone(), vars, order, relations: Vec::new() }),
        }
    }

    pub fn field(&self) -> &F {
        &self.inner.field
    }

    pub fn vars(&self) -> &[String] {
        &self.inner.vars
    }

    pub fn nvars(&self) -> usize {
        self.inner.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.inner.order
    }

    pub fn relations(&self) -> &[Poly<F::Elem>] {
        &self.inner.relations
    }

    pub fn is_quotient(&self) -> bool {
        !self.inner.relations.is_empty()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.inner.vars.iter().position(|v| v == name)
    }

    pub(crate) fn engine(&self) -> Engine<'_, F> {
        Engine::new(&self.inner.field, self.inner.order)
    }

    pub fn var(&self, i: usize) -> Poly<F::Elem> {
        Poly { terms: vec![(Monomial::var(self.nvars(), i), self.field().one())] }
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        if self.field().is_zero(&c) {
            Poly::zero()
        } else {
            Poly { terms: vec![(Monomial::one(self.nvars()), c)] }
        }
    }

    pub fn term(&self, m: Monomial, c: F::Elem) -> Poly<F::Elem> {
        if self.field().is_zero(&c) {
            Poly::zero()
        } else {
            self.reduce(&Poly { terms: vec![(m, c)] })
        }
    }

    pub fn monomial(&self, exps: &[u16]) -> Poly<F::Elem> {
        self.term(Monomial::from_exps(exps), self.field().one())
    }

    /// Builds a polynomial from unsorted terms, combining duplicates; not reduced.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, F::Elem)>) -> Poly<F::Elem> {
        let f = self.field();
        let o = self.order();
        terms.sort_by(|a, b| o.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = f.add(&last.1, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| !f.is_zero(&t.1));
        Poly { terms: out }
    }

    pub fn lc(&self, p: &Poly<F::Elem>) -> F::Elem {
        p.leading().map(|t| t.1.clone()).unwrap_or_else(|| self.field().zero())
    }

    pub fn make_monic(&self, p: &Poly<F::Elem>) -> Poly<F::Elem> {
        match p.leading() {
            None => p.clone(),
            Some((_, c)) => {
                let inv = self.field().inv(c);
                self.scale(p, &inv)
            }
        }
    }

    pub fn scale(&self, p: &Poly<F::Elem>, c: &F::Elem) -> Poly<F::Elem> {
        let f = self.field();
        if f.is_zero(c) {
            return Poly::zero();
        }
        Poly { terms: p.terms.iter().map(|(m, x)| (m.clone(), f.mul(x, c))).collect() }
    }

    pub fn mul_term(&self, p: &Poly<F::Elem>, m: &Monomial, c: &F::Elem) -> Poly<F::Elem> {
        let f = self.field();
        Poly { terms: p.terms.iter().map(|(pm, x)| (pm.mul(m), f.mul(x, c))).collect() }
    }

    fn merge(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>, negate_b: bool) -> Poly<F::Elem> {
        let f = self.field();
        let o = self.order();
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        let bval = |c: &F::Elem| if negate_b { f.neg(c) } else { c.clone() };
        while i < a.terms.len() && j < b.terms.len() {
            match o.cmp(&a.terms[i].0, &b.terms[j].0) {
                Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b.terms[j].0.clone(), bval(&b.terms[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_b {
                        f.sub(&a.terms[i].1, &b.terms[j].1)
                    } else {
                        f.add(&a.terms[i].1, &b.terms[j].1)
                    };
                    if !f.is_zero(&c) {
                        out.push((a.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a.terms[i..].iter().cloned());
        out.extend(b.terms[j..].iter().map(|(m, c)| (m.clone(), bval(c))));
        Poly { terms: out }
    }

    /// Product in the free polynomial ring (no reduction).
    pub fn mul_free(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (small, big) = if a.terms.len() <= b.terms.len() { (a, b) } else { (b, a) };
        let mut acc = Poly::zero();
        for (m, c) in &small.terms {
            acc = self.merge(&acc, &self.mul_term(big, m, c), false);
        }
        acc
    }

    /// Normal form modulo the ring relations.
    pub fn reduce(&self, p: &Poly<F::Elem>) -> Poly<F::Elem> {
        if self.inner.relations.is_empty() || p.is_zero() {
            return p.clone();
        }
        let basis: Vec<Vec<VTerm<F::Elem>>> =
            self.inner.relations.iter().map(|g| g.clone().into_vterms(0)).collect();
        Poly::from_vterms(self.engine().reduce(p.clone().into_vterms(0), &basis))
    }

    /// Reduced Gröbner basis (in the free ring) of the ideal generated by `gens`,
    /// sorted by decreasing leading monomial.
    pub fn ideal_gb(&self, gens: &[Poly<F::Elem>]) -> Vec<Poly<F::Elem>> {
        let vecs: Vec<Vec<VTerm<F::Elem>>> =
            gens.iter().filter(|g| !g.is_zero()).map(|g| g.clone().into_vterms(0)).collect();
        self.engine().groebner(vecs, true).into_iter().map(Poly::from_vterms).collect()
    }

    /// Remainder of `p` on division by a Gröbner basis (free ring).
    pub fn normal_form(&self, p: &Poly<F::Elem>, gb: &[Poly<F::Elem>]) -> Poly<F::Elem> {
        let basis: Vec<Vec<VTerm<F::Elem>>> = gb.iter().map(|g| g.clone().into_vterms(0)).collect();
        Poly::from_vterms(self.engine().reduce(p.clone().into_vterms(0), &basis))
    }

    /// `f / g` in the free ring when `g` divides `f` exactly.
    pub fn divide_exact(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Option<Poly<F::Elem>> {
        let (gm, gc) = g.leading()?;
        let ginv = self.field().inv(gc);
        let mut rem = f.clone();
        let mut q = Poly::zero();
        while let Some((m, c)) = rem.leading().cloned() {
            if !gm.divides(&m) {
                return None;
            }
            let t = gm.quotient_of(&m);
            let coef = self.field().mul(&c, &ginv);
            rem = self.merge(&rem, &self.mul_term(g, &t, &coef), true);
            q = self.merge(&q, &Poly { terms: vec![(t, coef)] }, false);
        }
        Some(q)
    }

    /// Moves `p` into `target`, whose variable `i` is this ring's variable `map[i]`.
    pub fn transfer(&self, p: &Poly<F::Elem>, target: &PolyRing<F>, map: &[Option<usize>]) -> Poly<F::Elem> {
        target.from_terms(p.terms.iter().map(|(m, c)| (m.remap(map), c.clone())).collect())
    }

    /// Substitutes field values for some variables (others kept), then reduces.
    pub fn substitute(&self, p: &Poly<F::Elem>, values: &[Option<F::Elem>]) -> Poly<F::Elem> {
        let f = self.field();
        let n = self.nvars();
        let mut terms = Vec::with_capacity(p.terms.len());
        for (m, c) in &p.terms {
            let mut coef = c.clone();
            let mut exps = m.exps().to_vec();
            for i in 0..n {
                if let Some(v) = &values[i] {
                    coef = f.mul(&coef, &f.pow(v, exps[i] as u32));
                    exps[i] = 0;
                }
            }
            terms.push((Monomial::from_exps(&exps), coef));
        }
        self.reduce(&self.from_terms(terms))
    }

    /// The same ring seen as a univariate Euclidean domain (one variable, no relations).
    pub fn univariate(&self) -> Option<UnivariatePolyRing<F>> {
        if self.nvars() == 1 && !self.is_quotient() {
            Some(UnivariatePolyRing::new(self.field().clone(), self.inner.vars[0].clone()))
        } else {
            None
        }
    }

    pub fn to_upoly(&self, p: &Poly<F::Elem>) -> UPoly<F::Elem> {
        let f = self.field();
        let deg = p.total_degree().unwrap_or(0) as usize;
        let mut v = vec![f.zero(); if p.is_zero() { 0 } else { deg + 1 }];
        for (m, c) in &p.terms {
            v[m.degree() as usize] = c.clone();
        }
        v
    }

    pub fn from_upoly(&self, u: &UPoly<F::Elem>) -> Poly<F::Elem> {
        let terms = u
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.field().is_zero(c))
            .map(|(d, c)| (Monomial::from_exps(&[d as u16]), c.clone()))
            .collect();
        self.from_terms(terms)
    }

    pub fn parse(&self, text: &str) -> Result<Poly<F::Elem>> {
        let mut p = Parser { src: text.as_bytes(), pos: 0, ring: self };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(Error::Malformed(format!("unexpected {:?} at offset {}", p.src[p.pos] as char, p.pos)));
        }
        Ok(self.reduce(&e))
    }
}

impl<F: ScalarField> Ring for PolyRing<F> {
    type Elem = Poly<F::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly::zero()
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.field().one())
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.constant(self.field().from_i64(n))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.merge(a, b, false)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.merge(a, b, true)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        self.reduce(&self.mul_free(a, b))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Poly { terms: a.terms.iter().map(|(m, c)| (m.clone(), self.field().neg(c))).collect() }
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.is_zero() {
            return None;
        }
        if a.is_constant() {
            return Some(self.constant(self.field().inv(&a.terms[0].1)));
        }
        if !self.is_quotient() {
            return None;
        }
        super::module::quotient_unit_inverse(self, a)
    }
    fn cheap_unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if !a.is_zero() && a.is_constant() {
            Some(self.constant(self.field().inv(&a.terms[0].1)))
        } else {
            None
        }
    }
    fn render(&self, a: &Self::Elem) -> String {
        render_poly(self.field(), self.vars(), a)
    }
    fn describe(&self) -> String {
        let base = format!("{}[{}]", self.field().describe(), self.vars().join(","));
        if self.is_quotient() {
            let rels: Vec<String> = self.relations().iter().map(|r| self.render(r)).collect();
            format!("{base}/({})", rels.join(", "))
        } else {
            base
        }
    }
}

pub fn render_poly<F: Field>(field: &F, vars: &[String], p: &Poly<F::Elem>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (m, c) in p.terms() {
        let mut cs = field.render(c);
        let negative = cs.starts_with('-');
        if negative {
            cs.remove(0);
        }
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&cs);
        } else if cs == "1" {
            out.push_str(&m.render(vars));
        } else {
            out.push_str(&format!("{cs}*{}", m.render(vars)));
        }
    }
    out
}

pub struct DisplayPoly<'a, F: ScalarField>(pub &'a PolyRing<F>, pub &'a Poly<F::Elem>);

impl<F: ScalarField> fmt::Display for DisplayPoly<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.render(self.1))
    }
}

struct Parser<'a, F: ScalarField> {
    src: &'a [u8],
    pos: usize,
    ring: &'a PolyRing<F>,
}

impl<F: ScalarField> Parser<'_, F> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> Error {
        Error::Malformed(format!("{msg} at offset {}", self.pos))
    }

    fn expr(&mut self) -> Result<Poly<F::Elem>> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.ring.add(&acc, &t);
                }
                b'-' => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.ring.sub(&acc, &t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly<F::Elem>> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.unary()?;
                    acc = self.ring.mul_free(&acc, &f);
                }
                Some(b'/') => {
                    self.pos += 1;
                    self.skip_ws();
                    let d = self.integer()?;
                    let one = BigInt::from(1);
                    let inv = self.ring.field().from_rational(&one, &d)?;
                    acc = self.ring.scale(&acc, &inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Poly<F::Elem>> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                let u = self.unary()?;
                Ok(self.ring.neg(&u))
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly<F::Elem>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent out of range"))?;
            let mut acc = self.ring.from_i64(1);
            for _ in 0..e {
                acc = self.ring.mul_free(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<Poly<F::Elem>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let c = self.ring.field().from_rational(&n, &BigInt::from(1))?;
                Ok(self.ring.constant(c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
                match self.ring.var_index(name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => {
                        self.pos = start;
                        Err(self.err(&format!("unknown variable {name}")))
                    }
                }
            }
            _ => Err(self.err("expected a polynomial")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{PrimeField, RationalField};

    fn qxy() -> PolyRing<RationalField> {
        PolyRing::new(RationalField, vec!["x".into(), "y".into()], MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn parse_and_render_round_trip() {
        let r = qxy();
        for s in ["x^2*y - 3*x + 1/2", "-x + y", "0", "x*y^3 + x^2"] {
            let p = r.parse(s).unwrap();
            let again = r.parse(&r.render(&p)).unwrap();
            assert_eq!(p, again);
        }
        assert_eq!(r.render(&r.parse("(x+y)^2").unwrap()), "x^2 + 2*x*y + y^2");
        assert_eq!(r.render(&r.parse("y + x*y^3 + x^2").unwrap()), "x*y^3 + x^2 + y");
        assert!(r.parse("x + z").is_err());
        assert!(r.parse("x +").is_err());
    }

    #[test]
    fn prime_field_prints_least_residues() {
        let r = PolyRing::new(PrimeField::new(7).unwrap(), vec!["x".into()], MonomialOrder::Grevlex).unwrap();
        assert_eq!(r.render(&r.parse("-x - 1").unwrap()), "6*x + 6");
    }

    #[test]
    fn quotient_ring_reduces_products() {
        let r = qxy();
        let q = r.quotient(&[r.parse("x^2").unwrap()]).unwrap();
        let x = q.var(0);
        assert!(q.mul(&x, &x).is_zero());
        let u = q.parse("1 + x").unwrap();
        let inv = q.unit_inverse(&u).unwrap();
        assert_eq!(q.mul(&u, &inv), q.one());
        assert!(q.unit_inverse(&q.var(1)).is_none());
    }

    #[test]
    fn exact_division() {
        let r = qxy();
        let f = r.parse("x^2*y - x*y^2").unwrap();
        let g = r.parse("x - y").unwrap();
        assert_eq!(r.render(&r.divide_exact(&f, &g).unwrap()), "x*y");
        assert!(r.divide_exact(&f, &r.parse("x + y").unwrap()).is_none());
    }
}
