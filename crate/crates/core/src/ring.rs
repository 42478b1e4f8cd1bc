//! Ring abstractions shared by the linear algebra, Gröbner and complex layers.
//!
//! Rings are values (they may carry a modulus, variable names, relations);
//! elements are plain data and every operation goes through the ring.

use std::cmp::Ordering;
use std::fmt::Debug;

use crate::exactla::Matrix;

pub trait Ring: Clone + Debug + PartialEq + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Inverse of `a` when `a` is a unit.
    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// A unit inverse that is cheap to find (constants, signs); may miss units.
    fn cheap_unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        self.unit_inverse(a)
    }

    fn render(&self, a: &Self::Elem) -> String;
    fn describe(&self) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

pub trait Field: Ring {
    /// Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn characteristic(&self) -> u64;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }
}

/// A Euclidean domain with a deterministic size function and canonical associates.
pub trait EuclideanDomain: Ring {
    /// Compares Euclidean sizes (absolute value, degree).
    fn size_cmp(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;
    /// `a = q*b + r` with `r == 0` or `size(r) < size(b)`.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);
    /// Unit `u` such that `u*a` is the canonical associate (positive, monic).
    fn canonical_unit(&self, a: &Self::Elem) -> Self::Elem;

    fn divides(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        if self.is_zero(a) {
            return self.is_zero(b);
        }
        self.is_zero(&self.div_rem(b, a).1)
    }

    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !self.is_zero(&y) {
            let r = self.div_rem(&x, &y).1;
            x = y;
            y = r;
        }
        if self.is_zero(&x) {
            x
        } else {
            self.mul(&self.canonical_unit(&x), &x)
        }
    }
}

/// Canonical, presentation-independent invariants of a finitely presented module.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ModuleInvariants {
    /// Over a field.
    Field { dim: usize },
    /// Over a PID: free rank plus normalized non-unit invariant factors.
    Pid { free_rank: usize, torsion: Vec<String> },
    /// Fitting ideals `Fitt_0, Fitt_1, ...` as reduced Gröbner bases, up to the first unit ideal.
    Fitting { ideals: Vec<Vec<String>> },
}

impl ModuleInvariants {
    pub fn is_zero(&self) -> bool {
        match self {
            ModuleInvariants::Field { dim } => *dim == 0,
            ModuleInvariants::Pid { free_rank, torsion } => *free_rank == 0 && torsion.is_empty(),
            ModuleInvariants::Fitting { ideals } => {
                ideals.first().map(|f| f == &["1".to_string()]).unwrap_or(true)
            }
        }
    }
}

impl std::fmt::Display for ModuleInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModuleInvariants::Field { dim } => write!(f, "dim {dim}"),
            ModuleInvariants::Pid { free_rank, torsion } => {
                if *free_rank == 0 && torsion.is_empty() {
                    return write!(f, "0");
                }
                let mut parts = Vec::new();
                if *free_rank > 0 {
                    parts.push(if *free_rank == 1 { "R".to_string() } else { format!("R^{free_rank}") });
                }
                for t in torsion {
                    parts.push(format!("R/({t})"));
                }
                write!(f, "{}", parts.join(" + "))
            }
            ModuleInvariants::Fitting { ideals } => {
                if self.is_zero() {
                    return write!(f, "0");
                }
                let parts: Vec<String> = ideals
                    .iter()
                    .enumerate()
                    .map(|(j, gb)| format!("Fitt_{j} = ({})", gb.join(", ")))
                    .collect();
                write!(f, "{}", parts.join("; "))
            }
        }
    }
}

/// Module-theoretic primitives a ring must provide for homology and derived functors.
///
/// Matrices act on column vectors; an `m x n` matrix is a map `R^n -> R^m`.
pub trait ModuleAlgebra: Ring {
    /// Generators (as columns) of the kernel of `a: R^n -> R^m`.
    fn kernel(&self, a: &Matrix<Self::Elem>) -> Matrix<Self::Elem>;

    /// Some `x` with `a * x = b`, if one exists.
    fn solve(&self, a: &Matrix<Self::Elem>, b: &Matrix<Self::Elem>) -> Option<Matrix<Self::Elem>>;

    /// Whether every column of `b` lies in the column span of `a`.
    fn image_contains(&self, a: &Matrix<Self::Elem>, b: &Matrix<Self::Elem>) -> bool {
        self.solve(a, b).is_some()
    }

    /// Invariants of `coker(rel: R^r -> R^gens)`.
    fn coker_invariants(&self, gens: usize, rel: &Matrix<Self::Elem>) -> ModuleInvariants;

    fn coker_is_zero(&self, gens: usize, rel: &Matrix<Self::Elem>) -> bool {
        let id = Matrix::identity(self, gens);
        self.image_contains(rel, &id)
    }
}
