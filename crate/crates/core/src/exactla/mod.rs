//! Exact linear algebra over fields and Euclidean domains.

mod field_la;
mod matrix;
mod scalars;
mod snf;
mod univariate;

pub use field_la::{rank, rank_kernel, rank_kernel_with, rref, solve as solve_over_field, LinAlgConfig, Rref};
pub use matrix::Matrix;
pub use scalars::{is_prime, Integers, PrimeField, RationalField, ScalarField};
pub use snf::{smith_normal_form, SmithForm};
pub use univariate::{UPoly, UnivariatePolyRing};

use crate::error::{Error, Result};
use crate::ring::{EuclideanDomain, Field, ModuleAlgebra, ModuleInvariants};

fn check_composable<T: Clone, R: crate::ring::Ring<Elem = T>>(
    ring: &R,
    d_in: &Matrix<T>,
    d_out: &Matrix<T>,
) -> Result<()> {
    if d_out.ncols() != d_in.nrows() {
        return Err(Error::DimensionMismatch(format!(
            "outgoing differential has {} columns, incoming has {} rows",
            d_out.ncols(),
            d_in.nrows()
        )));
    }
    if !d_out.mul(ring, d_in).is_zero(ring) {
        return Err(Error::NotAComplex("composite of consecutive differentials is nonzero".into()));
    }
    Ok(())
}

/// Invariants of `coker(rel)` on `gens` generators over a Euclidean domain.
pub fn pid_coker_invariants<E: EuclideanDomain>(ring: &E, gens: usize, rel: &Matrix<E::Elem>) -> ModuleInvariants {
    let s = smith_normal_form(ring, rel);
    let torsion = s.diagonal[..s.rank]
        .iter()
        .filter(|d| ring.unit_inverse(d).is_none())
        .map(|d| ring.render(d))
        .collect();
    ModuleInvariants::Pid { free_rank: gens - s.rank, torsion }
}

/// `ker(d_out) / im(d_in)` over a Euclidean domain, via Smith normal form.
pub fn homology_invariants_pid<E: EuclideanDomain>(
    ring: &E,
    d_in: &Matrix<E::Elem>,
    d_out: &Matrix<E::Elem>,
) -> Result<ModuleInvariants> {
    check_composable(ring, d_in, d_out)?;
    let s = smith_normal_form(ring, d_out);
    let n = d_out.ncols();
    // In the basis given by the columns of v, the kernel is spanned by the last n - rank vectors.
    let coords = s.v_inv.mul(ring, d_in);
    let rel = coords.row_range(s.rank, n);
    Ok(pid_coker_invariants(ring, n - s.rank, &rel))
}

/// Dimension of `ker(d_out) / im(d_in)` over a field.
pub fn homology_invariants_field<F: Field>(
    field: &F,
    d_in: &Matrix<F::Elem>,
    d_out: &Matrix<F::Elem>,
) -> Result<ModuleInvariants> {
    check_composable(field, d_in, d_out)?;
    let dim = d_out.ncols() - rank(field, d_out) - rank(field, d_in);
    Ok(ModuleInvariants::Field { dim })
}

fn pid_kernel<E: EuclideanDomain>(ring: &E, a: &Matrix<E::Elem>) -> Matrix<E::Elem> {
    let s = smith_normal_form(ring, a);
    s.v.col_range(s.rank, a.ncols())
}

fn pid_solve<E: EuclideanDomain>(ring: &E, a: &Matrix<E::Elem>, b: &Matrix<E::Elem>) -> Option<Matrix<E::Elem>> {
    let s = smith_normal_form(ring, a);
    let y = s.u.mul(ring, b);
    let mut z = Matrix::zeros(ring, a.ncols(), b.ncols());
    for k in 0..b.ncols() {
        for i in 0..a.nrows() {
            let yi = y.get(i, k);
            if i < s.rank {
                let (q, r) = ring.div_rem(yi, &s.diagonal[i]);
                if !ring.is_zero(&r) {
                    return None;
                }
                z.set(i, k, q);
            } else if !ring.is_zero(yi) {
                return None;
            }
        }
    }
    Some(s.v.mul(ring, &z))
}

impl ModuleAlgebra for Integers {
    fn kernel(&self, a: &Matrix<Self::Elem>) -> Matrix<Self::Elem> {
        pid_kernel(self, a)
    }
    fn solve(&self, a: &Matrix<Self::Elem>, b: &Matrix<Self::Elem>) -> Option<Matrix<Self::Elem>> {
        pid_solve(self, a, b)
    }
    fn coker_invariants(&self, gens: usize, rel: &Matrix<Self::Elem>) -> ModuleInvariants {
        pid_coker_invariants(self, gens, rel)
    }
}

impl<F: Field> ModuleAlgebra for UnivariatePolyRing<F> {
    fn kernel(&self, a: &Matrix<Self::Elem>) -> Matrix<Self::Elem> {
        pid_kernel(self, a)
    }
    fn solve(&self, a: &Matrix<Self::Elem>, b: &Matrix<Self::Elem>) -> Option<Matrix<Self::Elem>> {
        pid_solve(self, a, b)
    }
    fn coker_invariants(&self, gens: usize, rel: &Matrix<Self::Elem>) -> ModuleInvariants {
        pid_coker_invariants(self, gens, rel)
    }
}

fn field_kernel<F: Field>(field: &F, a: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let (_, basis) = rank_kernel(field, a);
    Matrix::from_cols(basis, a.ncols()).expect("kernel vectors have ncols entries")
}

macro_rules! field_module_algebra {
    ($t:ty) => {
        impl ModuleAlgebra for $t {
            fn kernel(&self, a: &Matrix<Self::Elem>) -> Matrix<Self::Elem> {
                field_kernel(self, a)
            }
            fn solve(&self, a: &Matrix<Self::Elem>, b: &Matrix<Self::Elem>) -> Option<Matrix<Self::Elem>> {
                solve_over_field(self, a, b)
            }
            fn coker_invariants(&self, gens: usize, rel: &Matrix<Self::Elem>) -> ModuleInvariants {
                ModuleInvariants::Field { dim: gens - rank(self, rel) }
            }
        }
    };
}

field_module_algebra!(RationalField);
field_module_algebra!(PrimeField);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;
    use num_bigint::BigInt;

    fn z(rows: &[&[i64]], cols: usize) -> Matrix<BigInt> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(), cols).unwrap()
    }

    #[test]
    fn doubling_has_two_torsion() {
        let h = homology_invariants_pid(&Integers, &z(&[&[2]], 1), &z(&[], 1)).unwrap();
        assert_eq!(h, ModuleInvariants::Pid { free_rank: 0, torsion: vec!["2".into()] });
    }

    #[test]
    fn zero_differentials_give_free_rank() {
        let h = homology_invariants_pid(&Integers, &z(&[&[], &[]], 0), &z(&[], 2)).unwrap();
        assert_eq!(h, ModuleInvariants::Pid { free_rank: 2, torsion: vec![] });
    }

    #[test]
    fn x_over_univariate_ring() {
        let q = UnivariatePolyRing::new(RationalField, "x");
        let d_in = Matrix::from_rows(vec![vec![q.x()]], 1).unwrap();
        let d_out: Matrix<UPoly<_>> = Matrix::zeros(&q, 0, 1);
        let h = homology_invariants_pid(&q, &d_in, &d_out).unwrap();
        assert_eq!(h, ModuleInvariants::Pid { free_rank: 0, torsion: vec!["x".into()] });
    }

    #[test]
    fn non_complex_is_rejected() {
        let e = homology_invariants_pid(&Integers, &z(&[&[1]], 1), &z(&[&[1]], 1));
        assert!(matches!(e, Err(Error::NotAComplex(_))));
    }

    #[test]
    fn pid_solve_respects_divisibility() {
        let a = z(&[&[2, 0], &[0, 3]], 2);
        assert!(Integers.solve(&a, &z(&[&[4], &[9]], 1)).is_some());
        assert!(Integers.solve(&a, &z(&[&[1], &[0]], 1)).is_none());
        let k = Integers.kernel(&z(&[&[1, 1]], 2));
        assert_eq!(k.ncols(), 1);
        assert!(z(&[&[1, 1]], 2).mul(&Integers, &k).is_zero(&Integers));
        assert!(!Integers.coker_is_zero(1, &z(&[&[2]], 1)));
        assert!(Integers.coker_is_zero(1, &z(&[&[2, 3]], 2)));
        assert_eq!(Integers.from_i64(3), BigInt::from(3));
    }
}
