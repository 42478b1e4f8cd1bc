//! Submodules of free modules over `k[x]/I`: syzygies, lifting, cokernel invariants.

use std::collections::BTreeSet;

use super::gb::VTerm;
use super::poly::{Poly, PolyRing};
use crate::exactla::{pid_coker_invariants, Matrix, ScalarField};
use crate::ring::{ModuleAlgebra, ModuleInvariants, Ring};

type Vector<E> = Vec<VTerm<E>>;

impl<F: ScalarField> PolyRing<F> {
    fn column_vector(&self, a: &Matrix<Poly<F::Elem>>, j: usize, offset: u32) -> Vector<F::Elem> {
        let mut v = Vec::new();
        for i in 0..a.nrows() {
            v.extend(a.get(i, j).clone().into_vterms(offset + i as u32));
        }
        v
    }

    fn vector_to_column(&self, v: &[VTerm<F::Elem>], start: u32, len: usize) -> Vec<Poly<F::Elem>> {
        let mut cols: Vec<Vec<(super::Monomial, F::Elem)>> = vec![Vec::new(); len];
        for (p, m, c) in v {
            if *p >= start && ((*p - start) as usize) < len {
                cols[(*p - start) as usize].push((m.clone(), c.clone()));
            }
        }
        cols.into_iter().map(|t| self.reduce(&self.from_terms(t))).collect()
    }

    /// `a` followed by the columns `g * e_i` for every relation `g` and row `i`.
    fn with_relation_columns(&self, a: &Matrix<Poly<F::Elem>>) -> Matrix<Poly<F::Elem>> {
        let rels = self.relations();
        if rels.is_empty() {
            return a.clone();
        }
        let m = a.nrows();
        let mut extra: Vec<Vec<Poly<F::Elem>>> = Vec::new();
        for i in 0..m {
            for g in rels {
                let mut col = vec![Poly::zero(); m];
                col[i] = g.clone();
                extra.push(col);
            }
        }
        a.hstack(&Matrix::from_cols(extra, m).expect("relation columns"))
    }

    /// Gröbner basis of the augmented vectors `(a_j, e_j)`; positions `0..m` hold `a`.
    fn augmented_gb(&self, a: &Matrix<Poly<F::Elem>>) -> Vec<Vector<F::Elem>> {
        let m = a.nrows() as u32;
        let gens: Vec<Vector<F::Elem>> = (0..a.ncols())
            .map(|j| {
                let mut v = self.column_vector(a, j, 0);
                v.push((m + j as u32, super::Monomial::one(self.nvars()), self.field().one()));
                v
            })
            .collect();
        self.engine().groebner(gens, false)
    }

    /// Generators (as columns) of `{c : a*c = 0}` over this ring.
    pub fn syzygies(&self, a: &Matrix<Poly<F::Elem>>) -> Matrix<Poly<F::Elem>> {
        let (m, n) = a.shape();
        if n == 0 {
            return Matrix::zeros(self, 0, 0);
        }
        let full = self.with_relation_columns(a);
        let gb = self.augmented_gb(&full);
        let mut cols: Vec<Vec<Poly<F::Elem>>> = Vec::new();
        for g in gb.iter().filter(|g| g[0].0 >= m as u32) {
            let c = self.vector_to_column(g, m as u32, n);
            if c.iter().any(|p| !p.is_zero()) && !cols.contains(&c) {
                cols.push(c);
            }
        }
        Matrix::from_cols(cols, n).expect("syzygy columns")
    }

    /// Reduced Gröbner basis of the column span of `a` plus the relation submodule.
    pub fn module_gb(&self, a: &Matrix<Poly<F::Elem>>) -> ModuleGb<F> {
        let full = self.with_relation_columns(a);
        let gens = (0..full.ncols()).map(|j| self.column_vector(&full, j, 0)).collect();
        ModuleGb { ring: self.clone(), rank: a.nrows(), basis: self.engine().groebner(gens, a.nrows() == 1) }
    }

    /// Rank over the fraction field of the free polynomial ring (relations ignored).
    pub fn free_column_rank(&self, a: &Matrix<Poly<F::Elem>>) -> usize {
        let free = self.free();
        let gens = (0..a.ncols()).map(|j| free.column_vector(a, j, 0)).collect();
        let gb = free.engine().groebner(gens, a.nrows() == 1);
        gb.iter().map(|g| g[0].0).collect::<BTreeSet<u32>>().len()
    }

    fn fitting_invariants(&self, gens: usize, rel: &Matrix<Poly<F::Elem>>) -> ModuleInvariants {
        debug_assert_eq!(gens, rel.nrows());
        let rel = crate::complexes::prune_presentation(self, rel);
        let g = rel.nrows();
        let r = rel.ncols();
        let mut ideals = Vec::new();
        for j in 0..=g {
            let size = g - j;
            let mut all = if size == 0 {
                vec![self.one()]
            } else if size > r {
                Vec::new()
            } else {
                all_minors(self, &rel, size)
            };
            all.extend(self.relations().iter().cloned());
            let gb = self.free().ideal_gb(&all);
            let rendered: Vec<String> = if gb.is_empty() {
                vec!["0".to_string()]
            } else {
                gb.iter().map(|p| self.render(p)).collect()
            };
            let unit = rendered == ["1"];
            ideals.push(rendered);
            if unit {
                break;
            }
        }
        ModuleInvariants::Fitting { ideals }
    }
}

/// All `k x k` minors, rows and columns in lexicographic subset order.
pub fn all_minors<R: Ring>(ring: &R, a: &Matrix<R::Elem>, k: usize) -> Vec<R::Elem> {
    let rows = subsets(a.nrows(), k);
    let cols = subsets(a.ncols(), k);
    let mut out = Vec::new();
    for rs in &rows {
        for cs in &cols {
            let d = determinant(ring, &a.select(rs, cs));
            if !ring.is_zero(&d) {
                out.push(d);
            }
        }
    }
    out
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Determinant by cofactor expansion along the sparsest row.
pub fn determinant<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> R::Elem {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "determinant of a non-square matrix");
    match n {
        0 => return ring.one(),
        1 => return a.get(0, 0).clone(),
        2 => {
            return ring.sub(&ring.mul(a.get(0, 0), a.get(1, 1)), &ring.mul(a.get(0, 1), a.get(1, 0)));
        }
        _ => {}
    }
    let row = (0..n)
        .min_by_key(|&i| a.row(i).iter().filter(|x| !ring.is_zero(x)).count())
        .expect("nonempty");
    let mut acc = ring.zero();
    let rest_rows: Vec<usize> = (0..n).filter(|&i| i != row).collect();
    for j in 0..n {
        let x = a.get(row, j);
        if ring.is_zero(x) {
            continue;
        }
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let minor = determinant(ring, &a.select(&rest_rows, &cols));
        let term = ring.mul(x, &minor);
        acc = if (row + j) % 2 == 0 { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
    }
    acc
}

/// A Gröbner basis of a submodule of `R^rank`, for membership and normal forms.
#[derive(Debug, Clone)]
pub struct ModuleGb<F: ScalarField> {
    ring: PolyRing<F>,
    rank: usize,
    basis: Vec<Vector<F::Elem>>,
}

impl<F: ScalarField> ModuleGb<F> {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn normal_form(&self, v: &[Poly<F::Elem>]) -> Vec<Poly<F::Elem>> {
        let mut terms = Vec::new();
        for (i, p) in v.iter().enumerate() {
            terms.extend(p.clone().into_vterms(i as u32));
        }
        let terms = self.ring.engine().normalize(terms);
        let r = self.ring.engine().reduce(terms, &self.basis);
        self.ring.vector_to_column(&r, 0, self.rank)
    }

    pub fn contains(&self, v: &[Poly<F::Elem>]) -> bool {
        self.normal_form(v).iter().all(|p| p.is_zero())
    }

    /// Whether the submodule is the whole free module.
    pub fn is_everything(&self) -> bool {
        (0..self.rank as u32).all(|i| self.basis.iter().any(|g| g[0].0 == i && g[0].1.is_one()))
    }

    pub fn leading_positions(&self) -> BTreeSet<u32> {
        self.basis.iter().map(|g| g[0].0).collect()
    }

    /// Leading monomials at each position.
    pub fn leading_monomials(&self, pos: u32) -> Vec<super::Monomial> {
        self.basis.iter().filter(|g| g[0].0 == pos).map(|g| g[0].1.clone()).collect()
    }
}

pub(crate) fn quotient_unit_inverse<F: ScalarField>(ring: &PolyRing<F>, a: &Poly<F::Elem>) -> Option<Poly<F::Elem>> {
    let am = Matrix::filled(1, 1, a.clone());
    let one = Matrix::filled(1, 1, ring.one());
    ring.solve(&am, &one).map(|x| x.get(0, 0).clone())
}

impl<F: ScalarField> ModuleAlgebra for PolyRing<F> {
    fn kernel(&self, a: &Matrix<Self::Elem>) -> Matrix<Self::Elem> {
        if a.ncols() == 0 {
            return Matrix::zeros(self, 0, 0);
        }
        if a.nrows() == 0 || a.is_zero(self) {
            return Matrix::identity(self, a.ncols());
        }
        self.syzygies(a)
    }

    fn solve(&self, a: &Matrix<Self::Elem>, b: &Matrix<Self::Elem>) -> Option<Matrix<Self::Elem>> {
        let (m, n) = a.shape();
        assert_eq!(m, b.nrows(), "solve: row mismatch");
        if b.is_zero(self) {
            return Some(Matrix::zeros(self, n, b.ncols()));
        }
        let full = self.with_relation_columns(a);
        let gb = self.augmented_gb(&full);
        let mut cols = Vec::with_capacity(b.ncols());
        for k in 0..b.ncols() {
            let v = self.engine().normalize(self.column_vector(b, k, 0));
            let r = self.engine().reduce(v, &gb);
            if r.iter().any(|t| (t.0 as usize) < m) {
                return None;
            }
            let c = self.vector_to_column(&r, m as u32, n);
            cols.push(c.iter().map(|p| self.neg(p)).collect());
        }
        Some(Matrix::from_cols(cols, n).expect("solution columns"))
    }

    fn coker_invariants(&self, gens: usize, rel: &Matrix<Self::Elem>) -> ModuleInvariants {
        if let Some(u) = self.univariate() {
            let m = rel.map(|p| self.to_upoly(p));
            return pid_coker_invariants(&u, gens, &m);
        }
        self.fitting_invariants(gens, rel)
    }

    fn coker_is_zero(&self, gens: usize, rel: &Matrix<Self::Elem>) -> bool {
        if gens == 0 {
            return true;
        }
        self.module_gb(rel).is_everything()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::RationalField;
    use crate::grobner::MonomialOrder;

    fn qxy() -> PolyRing<RationalField> {
        PolyRing::new(RationalField, vec!["x".into(), "y".into()], MonomialOrder::Grevlex).unwrap()
    }

    fn row(r: &PolyRing<RationalField>, s: &[&str]) -> Matrix<Poly<num_rational::BigRational>> {
        Matrix::from_rows(vec![s.iter().map(|t| r.parse(t).unwrap()).collect()], s.len()).unwrap()
    }

    #[test]
    fn koszul_relation_is_the_syzygy_of_x_y() {
        let r = qxy();
        let a = row(&r, &["x", "y"]);
        let k = r.kernel(&a);
        assert_eq!(k.ncols(), 1);
        assert!(a.mul(&r, &k).is_zero(&r));
        // (y, -x) up to sign
        let c0 = r.render(k.get(0, 0));
        let c1 = r.render(k.get(1, 0));
        assert!((c0 == "y" && c1 == "-x") || (c0 == "-y" && c1 == "x"), "{c0} {c1}");
    }

    #[test]
    fn unit_row_has_no_syzygies() {
        let r = qxy();
        assert_eq!(r.kernel(&row(&r, &["1"])).ncols(), 0);
        let k = r.kernel(&row(&r, &["x", "x"]));
        assert_eq!(k.ncols(), 1);
        assert_eq!(r.render(k.get(0, 0)), r.render(&r.neg(k.get(1, 0))));
    }

    #[test]
    fn solve_and_membership() {
        let r = qxy();
        let a = row(&r, &["x", "y"]);
        let b = row(&r, &["x*y + y^2"]);
        let x = r.solve(&a, &b).unwrap();
        assert_eq!(a.mul(&r, &x), b);
        assert!(r.solve(&a, &row(&r, &["1"])).is_none());
        assert!(r.coker_is_zero(1, &row(&r, &["x", "1 - x"])));
        assert!(!r.coker_is_zero(1, &a));
    }

    #[test]
    fn quotient_ring_kernel() {
        let r = qxy();
        let q = r.quotient(&[r.parse("x*y").unwrap()]).unwrap();
        let k = q.kernel(&row(&q, &["x"]));
        // annihilator of x in k[x,y]/(xy) is (y)
        assert_eq!(k.ncols(), 1);
        assert_eq!(q.render(k.get(0, 0)), "y");
    }

    #[test]
    fn fitting_ideals_of_diagonal_module() {
        let r = qxy();
        let rel = Matrix::from_rows(
            vec![vec![r.parse("x").unwrap(), r.zero()], vec![r.zero(), r.parse("y").unwrap()]],
            2,
        )
        .unwrap();
        let inv = r.coker_invariants(2, &rel);
        assert_eq!(
            inv,
            ModuleInvariants::Fitting {
                ideals: vec![vec!["x*y".into()], vec!["x".into(), "y".into()], vec!["1".into()]]
            }
        );
    }

    #[test]
    fn determinant_and_subsets() {
        let r = qxy();
        let m = Matrix::from_rows(
            vec![
                vec![r.from_i64(2), r.from_i64(0), r.from_i64(1)],
                vec![r.from_i64(1), r.from_i64(3), r.from_i64(0)],
                vec![r.from_i64(0), r.from_i64(1), r.from_i64(4)],
            ],
            3,
        )
        .unwrap();
        assert_eq!(determinant(&r, &m), r.from_i64(25));
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
    }
}
