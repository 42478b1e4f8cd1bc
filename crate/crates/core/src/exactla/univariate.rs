//! Dense univariate polynomials over a field, as a Euclidean domain.

use std::cmp::Ordering;

use crate::ring::{EuclideanDomain, Field, Ring};

#[derive(Debug, Clone, PartialEq)]
pub struct UnivariatePolyRing<F: Field> {
    field: F,
    var: String,
}

/// Coefficients from degree 0 upward, no trailing zeros.
pub type UPoly<E> = Vec<E>;

impl<F: Field> UnivariatePolyRing<F> {
    pub fn new(field: F, var: impl Into<String>) -> Self {
        UnivariatePolyRing { field, var: var.into() }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn degree(&self, a: &UPoly<F::Elem>) -> Option<usize> {
        if a.is_empty() {
            None
        } else {
            Some(a.len() - 1)
        }
    }

    pub fn from_coeffs(&self, mut c: Vec<F::Elem>) -> UPoly<F::Elem> {
        while c.last().is_some_and(|x| self.field.is_zero(x)) {
            c.pop();
        }
        c
    }

    pub fn x(&self) -> UPoly<F::Elem> {
        vec![self.field.zero(), self.field.one()]
    }

    pub fn monomial(&self, c: F::Elem, deg: usize) -> UPoly<F::Elem> {
        let mut v = vec![self.field.zero(); deg];
        v.push(c);
        self.from_coeffs(v)
    }

    pub fn constant(&self, c: F::Elem) -> UPoly<F::Elem> {
        self.from_coeffs(vec![c])
    }

    pub fn eval(&self, a: &UPoly<F::Elem>, at: &F::Elem) -> F::Elem {
        let f = &self.field;
        a.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, at), c))
    }
}

impl<F: Field> Ring for UnivariatePolyRing<F> {
    type Elem = UPoly<F::Elem>;

    fn zero(&self) -> Self::Elem {
        Vec::new()
    }
    fn one(&self) -> Self::Elem {
        vec![self.field.one()]
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_coeffs(vec![self.field.from_i64(n)])
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.len().max(b.len());
        let z = self.field.zero();
        let v = (0..n)
            .map(|i| self.field.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
            .collect();
        self.from_coeffs(v)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.len().max(b.len());
        let z = self.field.zero();
        let v = (0..n)
            .map(|i| self.field.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
            .collect();
        self.from_coeffs(v)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut v = vec![self.field.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                v[i + j] = self.field.add(&v[i + j], &self.field.mul(x, y));
            }
        }
        self.from_coeffs(v)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|c| self.field.neg(c)).collect()
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_empty()
    }
    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.len() == 1 {
            Some(vec![self.field.inv(&a[0])])
        } else {
            None
        }
    }
    fn render(&self, a: &Self::Elem) -> String {
        if a.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (d, c) in a.iter().enumerate().rev() {
            if self.field.is_zero(c) {
                continue;
            }
            let mut cs = self.field.render(c);
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
            let mono = match d {
                0 => String::new(),
                1 => self.var.clone(),
                _ => format!("{}^{}", self.var, d),
            };
            if mono.is_empty() {
                out.push_str(&cs);
            } else if cs == "1" {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{cs}*{mono}"));
            }
        }
        out
    }
    fn describe(&self) -> String {
        format!("{}[{}]", self.field.describe(), self.var)
    }
}

impl<F: Field> EuclideanDomain for UnivariatePolyRing<F> {
    fn size_cmp(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering {
        a.len().cmp(&b.len())
    }

    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem) {
        assert!(!b.is_empty(), "division by zero polynomial");
        let f = &self.field;
        let mut r = a.clone();
        let db = b.len() - 1;
        let lead_inv = f.inv(&b[db]);
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let mut q = vec![f.zero(); r.len() - db];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = f.mul(r.last().unwrap(), &lead_inv);
            for (i, bc) in b.iter().enumerate() {
                r[shift + i] = f.sub(&r[shift + i], &f.mul(&c, bc));
            }
            q[shift] = c;
            r = self.from_coeffs(r);
        }
        (self.from_coeffs(q), r)
    }

    fn canonical_unit(&self, a: &Self::Elem) -> Self::Elem {
        match a.last() {
            Some(lc) => vec![self.field.inv(lc)],
            None => self.one(),
        }
    }
}
