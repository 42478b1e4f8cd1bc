//! Scalar rings: ℤ, ℚ and prime fields.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ring::{EuclideanDomain, Field, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn unit_inverse(&self, a: &BigInt) -> Option<BigInt> {
        if a.abs().is_one() {
            Some(a.clone())
        } else {
            None
        }
    }
    fn render(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn describe(&self) -> String {
        "ZZ".into()
    }
}

impl EuclideanDomain for Integers {
    fn size_cmp(&self, a: &BigInt, b: &BigInt) -> Ordering {
        a.abs().cmp(&b.abs())
    }
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        a.div_rem(b)
    }
    fn canonical_unit(&self, a: &BigInt) -> BigInt {
        if a.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RationalField;

impl Ring for RationalField {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn unit_inverse(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn render(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn describe(&self) -> String {
        "QQ".into()
    }
}

impl Field for RationalField {
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

/// The prime field `F_p`; elements are least non-negative residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::UnsupportedRing(format!("{p} is not a supported prime modulus")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    pub fn reduce_bigint(&self, n: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        n.mod_floor(&m).to_u64().expect("residue fits")
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn unit_inverse(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.inv(a))
        }
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
    fn describe(&self) -> String {
        format!("Fp({})", self.p)
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        pow_mod(*a, self.p - 2, self.p)
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
}

/// Fields whose elements can be built from integers and rationals.
pub trait ScalarField: Field + crate::ring::ModuleAlgebra {
    fn from_rational(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem>;

    /// Whether the polynomial with these coefficients (constant term first) has a root
    /// in the field; `None` when the search would be too large to run.
    fn has_root(&self, coeffs: &[Self::Elem]) -> Option<bool>;
}

const ROOT_SEARCH_LIMIT: u64 = 1 << 20;

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > ROOT_SEARCH_LIMIT {
        return None;
    }
    Some((1..=n).filter(|d| n % d == 0).map(BigInt::from).collect())
}

impl ScalarField for RationalField {
    fn from_rational(&self, num: &BigInt, den: &BigInt) -> Result<BigRational> {
        if den.is_zero() {
            return Err(Error::Malformed("zero denominator".into()));
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }

    fn has_root(&self, coeffs: &[BigRational]) -> Option<bool> {
        let coeffs: Vec<&BigRational> = coeffs.iter().collect();
        if coeffs.len() <= 1 {
            return Some(false);
        }
        if coeffs[0].is_zero() {
            return Some(true);
        }
        // clear denominators, then apply the rational root theorem
        let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = coeffs.iter().map(|c| (*c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
        let a0 = divisors(&ints[0])?;
        let an = divisors(ints.last().unwrap())?;
        for p in &a0 {
            for q in &an {
                for sign in [1, -1] {
                    let r = BigRational::new(p * sign, q.clone());
                    let v = coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * &r + *c);
                    if v.is_zero() {
                        return Some(true);
                    }
                }
            }
        }
        Some(false)
    }
}

impl ScalarField for PrimeField {
    fn from_rational(&self, num: &BigInt, den: &BigInt) -> Result<u64> {
        let d = self.reduce_bigint(den);
        if d == 0 {
            return Err(Error::Malformed(format!("denominator vanishes mod {}", self.p)));
        }
        Ok(self.mul(&self.reduce_bigint(num), &self.inv(&d)))
    }

    fn has_root(&self, coeffs: &[u64]) -> Option<bool> {
        if coeffs.len() <= 1 {
            return Some(false);
        }
        if self.p > ROOT_SEARCH_LIMIT {
            return None;
        }
        Some((0..self.p).any(|x| coeffs.iter().rev().fold(0, |acc, c| (acc * x + c) % self.p) == 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3), 5);
        assert_eq!(f.neg(&0), 0);
        assert_eq!(f.from_i64(-1), 6);
        assert!(PrimeField::new(8).is_err());
        assert_eq!(f.has_root(&[1, 0, 1]), Some(false));
        assert_eq!(f.has_root(&[6, 0, 1]), Some(true));
        let big = PrimeField::new(32003).unwrap();
        assert_eq!(big.mul(&big.inv(&12345), &12345), 1);
    }

    #[test]
    fn integer_gcd_is_positive() {
        let z = Integers;
        assert_eq!(z.gcd(&BigInt::from(-12), &BigInt::from(18)), BigInt::from(6));
        assert_eq!(z.gcd(&BigInt::from(0), &BigInt::from(-5)), BigInt::from(5));
    }

    #[test]
    fn rational_root_search() {
        let q = RationalField;
        let c = |v: &[i64]| v.iter().map(|&x| q.from_i64(x)).collect::<Vec<_>>();
        assert_eq!(q.has_root(&c(&[1, 0, 1])), Some(false));
        assert_eq!(q.has_root(&c(&[-2, 0, 1])), Some(false));
        assert_eq!(q.has_root(&c(&[-1, 0, 4])), Some(true));
        assert_eq!(q.has_root(&c(&[0, 1, 1])), Some(true));
    }
}
