use std::fmt;

use super::ideal::Ideal;
use super::monomial::{Monomial, MonomialOrder};
use super::poly::{Poly, PolyRing};
use crate::error::{Error, Result};
use crate::exactla::ScalarField;

/// How primality was established. Nothing outside these classes is accepted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrimeCertificate {
    /// Generated by a subset of the variables.
    MonomialPrime,
    /// A single linear form, or a univariate polynomial of degree at most 3 without roots.
    PrincipalIrreducible,
    /// The quotient is a finite field extension of the base field.
    MaximalVerified,
    UserAsserted,
}

impl PrimeCertificate {
    pub fn name(&self) -> &'static str {
        match self {
            PrimeCertificate::MonomialPrime => "monomial-prime",
            PrimeCertificate::PrincipalIrreducible => "principal-irreducible",
            PrimeCertificate::MaximalVerified => "maximal-verified",
            PrimeCertificate::UserAsserted => "user-asserted",
        }
    }
}

#[derive(Debug, Clone)]
pub struct PrimeIdeal<F: ScalarField> {
    ideal: Ideal<F>,
    maximal: bool,
    certificate: PrimeCertificate,
}

/// Irreducible over the field when of degree 1, or of degree 2 or 3 without a root.
fn small_irreducible<F: ScalarField>(field: &F, coeffs: &[F::Elem]) -> Option<bool> {
    match coeffs.len() {
        0 | 1 => Some(false),
        2 => Some(true),
        3 | 4 => field.has_root(coeffs).map(|r| !r),
        _ => None,
    }
}

/// Coefficients (constant first) of a polynomial involving only variable `v`.
fn univariate_coeffs<F: ScalarField>(ring: &PolyRing<F>, p: &Poly<F::Elem>, v: usize) -> Vec<F::Elem> {
    let f = ring.field();
    let deg = p.terms().iter().map(|(m, _)| m.exps()[v] as usize).max().unwrap_or(0);
    let mut c = vec![f.zero(); deg + 1];
    for (m, x) in p.terms() {
        c[m.exps()[v] as usize] = x.clone();
    }
    c
}

impl<F: ScalarField> PrimeIdeal<F> {
    /// Tries the certificate classes in order; refuses anything else.
    pub fn certify(ideal: Ideal<F>) -> Result<Self> {
        let ring = ideal.ring().clone();
        let n = ring.nvars();
        let gb = ideal.groebner_basis().to_vec();
        if ideal.is_unit() {
            return Err(Error::NotCertifiable(format!("{ideal} is the unit ideal")));
        }
        let is_var = |g: &Poly<F::Elem>| g.is_monomial() && g.lm().map(|m| m.degree() == 1).unwrap_or(false);
        if gb.iter().all(is_var) {
            let maximal = gb.len() == n;
            return Ok(PrimeIdeal { ideal, maximal, certificate: PrimeCertificate::MonomialPrime });
        }
        if let Some(basis) = ideal.standard_monomials() {
            if basis.len() == 1 || Self::shape_is_field(&ring, &ideal)? {
                return Ok(PrimeIdeal { ideal, maximal: true, certificate: PrimeCertificate::MaximalVerified });
            }
            return Err(Error::NotCertifiable(format!("cannot certify that the quotient by {ideal} is a field")));
        }
        if !ring.is_quotient() && gb.len() == 1 {
            let f = &gb[0];
            let support = f.support();
            let linear = f.total_degree() == Some(1);
            let ok = if linear {
                true
            } else if support.len() == 1 {
                small_irreducible(ring.field(), &univariate_coeffs(&ring, f, support[0])).unwrap_or(false)
            } else {
                false
            };
            if ok {
                return Ok(PrimeIdeal { ideal, maximal: false, certificate: PrimeCertificate::PrincipalIrreducible });
            }
        }
        Err(Error::NotCertifiable(format!("no primality certificate for {ideal}")))
    }

    /// Lex basis of the form `x_i - g_i(x_n)`, `f(x_n)` with `f` irreducible.
    fn shape_is_field(ring: &PolyRing<F>, ideal: &Ideal<F>) -> Result<bool> {
        let n = ring.nvars();
        let lex = ring.free().with_order(MonomialOrder::Lex);
        let id: Vec<Option<usize>> = (0..n).map(Some).collect();
        let gens: Vec<Poly<F::Elem>> = ideal.groebner_basis().iter().map(|g| ring.transfer(g, &lex, &id)).collect();
        let gb = lex.ideal_gb(&gens);
        if gb.len() != n {
            return Ok(false);
        }
        let last = n - 1;
        for (i, g) in gb.iter().enumerate().take(last) {
            if g.lm() != Some(&Monomial::var(n, i)) {
                return Ok(false);
            }
            if g.terms()[1..].iter().any(|(m, _)| m.support().iter().any(|&v| v != last)) {
                return Ok(false);
            }
        }
        let f = &gb[last];
        if f.support().iter().any(|&v| v != last) {
            return Ok(false);
        }
        match small_irreducible(ring.field(), &univariate_coeffs(&lex, f, last)) {
            Some(b) => Ok(b),
            None => Err(Error::NotCertifiable("irreducibility search too large".into())),
        }
    }

    /// Accepts the caller's word for primality.
    pub fn assert_prime(ideal: Ideal<F>, maximal: bool) -> Self {
        PrimeIdeal { ideal, maximal, certificate: PrimeCertificate::UserAsserted }
    }

    pub fn of_vars(ring: &PolyRing<F>, vars: &[usize]) -> Result<Self> {
        Self::certify(Ideal::of_vars(ring, vars))
    }

    pub fn ideal(&self) -> &Ideal<F> {
        &self.ideal
    }

    pub fn ring(&self) -> &PolyRing<F> {
        self.ideal.ring()
    }

    pub fn is_maximal(&self) -> bool {
        self.maximal
    }

    pub fn certificate(&self) -> PrimeCertificate {
        self.certificate
    }

    pub fn require_maximal(&self) -> Result<()> {
        if self.maximal {
            Ok(())
        } else {
            Err(Error::NotMaximal(self.ideal.to_string()))
        }
    }

    /// Variables generating a monomial prime.
    pub fn monomial_vars(&self) -> Option<Vec<usize>> {
        if self.certificate != PrimeCertificate::MonomialPrime {
            return None;
        }
        let mut v: Vec<usize> = self.ideal.groebner_basis().iter().flat_map(|g| g.support()).collect();
        v.sort_unstable();
        Some(v)
    }

    /// Standard-monomial basis of the residue field when maximal.
    pub fn residue_basis(&self) -> Option<Vec<Monomial>> {
        if !self.maximal {
            return None;
        }
        self.ideal.standard_monomials()
    }

    /// Whether the prime contains the ideal.
    pub fn contains_ideal(&self, other: &Ideal<F>) -> bool {
        self.ideal.contains_ideal(other)
    }
}

impl<F: ScalarField> fmt::Display for PrimeIdeal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ideal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{PrimeField, RationalField};

    fn ring(vars: &[&str]) -> PolyRing<RationalField> {
        PolyRing::new(RationalField, vars.iter().map(|s| s.to_string()).collect(), MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn certificate_classes() {
        let r = ring(&["x", "y"]);
        let p = |g: &[&str]| PrimeIdeal::certify(Ideal::parse(&r, g).unwrap());
        let xy = p(&["x", "y"]).unwrap();
        assert_eq!(xy.certificate(), PrimeCertificate::MonomialPrime);
        assert!(xy.is_maximal());
        let x = p(&["x"]).unwrap();
        assert!(!x.is_maximal());
        let pt = p(&["x - 1", "y - 2"]).unwrap();
        assert_eq!(pt.certificate(), PrimeCertificate::MaximalVerified);
        let lin = p(&["x + y - 1"]).unwrap();
        assert_eq!(lin.certificate(), PrimeCertificate::PrincipalIrreducible);
        let irr = p(&["x^2 + 1"]).unwrap();
        assert_eq!(irr.certificate(), PrimeCertificate::PrincipalIrreducible);
        let ext = p(&["x^2 + 1", "y - x"]).unwrap();
        assert_eq!(ext.certificate(), PrimeCertificate::MaximalVerified);
        assert!(matches!(p(&["x*y"]), Err(Error::NotCertifiable(_))));
        assert!(matches!(p(&["x^2 - 1"]), Err(Error::NotCertifiable(_))));
        assert!(matches!(p(&["x^2", "y"]), Err(Error::NotCertifiable(_))));
        assert!(matches!(x.require_maximal(), Err(Error::NotMaximal(_))));
    }

    #[test]
    fn univariate_maximal_over_prime_field() {
        let r = PolyRing::new(PrimeField::new(7).unwrap(), vec!["x".into()], MonomialOrder::Grevlex).unwrap();
        let m = PrimeIdeal::certify(Ideal::parse(&r, &["x^2 + 1"]).unwrap()).unwrap();
        assert!(m.is_maximal());
        assert_eq!(m.residue_basis().unwrap().len(), 2);
    }
}
