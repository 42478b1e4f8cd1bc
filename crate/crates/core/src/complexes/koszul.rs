use std::collections::BTreeMap;

use super::ChainComplex;
use crate::exactla::Matrix;
use crate::grobner::subsets;
use crate::ring::ModuleAlgebra;

/// `K(x_1, ..., x_n)`: degree `k` has basis the `k`-subsets in lexicographic order and
/// `d(e_S) = Σ_j (-1)^j x_{s_j} e_{S \ s_j}` with `j` the position inside `S`.
pub fn koszul_complex<R: ModuleAlgebra>(ring: &R, elems: &[R::Elem]) -> ChainComplex<R> {
    let n = elems.len();
    let mut ranks = BTreeMap::new();
    let mut diffs = BTreeMap::new();
    let mut index: Vec<BTreeMap<Vec<usize>, usize>> = Vec::new();
    for k in 0..=n {
        let subs = subsets(n, k);
        ranks.insert(k as i64, subs.len());
        index.push(subs.into_iter().enumerate().map(|(i, s)| (s, i)).collect());
    }
    for k in 1..=n {
        let mut d = Matrix::zeros(ring, index[k - 1].len(), index[k].len());
        for (s, &c) in &index[k] {
            for (j, &v) in s.iter().enumerate() {
                let mut t = s.clone();
                t.remove(j);
                let x = if j % 2 == 0 { elems[v].clone() } else { ring.neg(&elems[v]) };
                d.set(index[k - 1][&t], c, x);
            }
        }
        diffs.insert(k as i64, d);
    }
    ChainComplex::new(ring.clone(), ranks, diffs).expect("Koszul complex")
}

/// A complex whose terms are localizations `R_{x_S}`, `x_S = Π_{s∈S} x_s`, kept symbolic.
///
/// Differentials are the canonical localization maps times signs.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalizedChainComplex<R: ModuleAlgebra> {
    ring: R,
    elems: Vec<R::Elem>,
    /// Tags (index subsets) of the rank-one summands in each degree.
    tags: BTreeMap<i64, Vec<Vec<usize>>>,
}

/// Čech complex `⊗_i (R -> R_{x_i})`, with `R` in degree 0 and `R_{x_1...x_n}` in degree `-n`.
pub fn cech_complex<R: ModuleAlgebra>(ring: &R, elems: &[R::Elem]) -> LocalizedChainComplex<R> {
    let n = elems.len();
    let tags = (0..=n).map(|k| (-(k as i64), subsets(n, k))).collect();
    LocalizedChainComplex { ring: ring.clone(), elems: elems.to_vec(), tags }
}

impl<R: ModuleAlgebra> LocalizedChainComplex<R> {
    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn elements(&self) -> &[R::Elem] {
        &self.elems
    }

    pub fn tags(&self) -> &BTreeMap<i64, Vec<Vec<usize>>> {
        &self.tags
    }

    /// Sign of the summand `S -> S ∪ {t}` in `d_i`, or `None` if not adjacent.
    pub fn sign(&self, from: &[usize], to: &[usize]) -> Option<i64> {
        if to.len() != from.len() + 1 || !from.iter().all(|s| to.contains(s)) {
            return None;
        }
        let pos = to.iter().position(|t| !from.contains(t))?;
        Some(if pos % 2 == 0 { 1 } else { -1 })
    }

    /// Signs of `d_i` as an integer matrix, rows the tags of degree `i-1`.
    pub fn sign_matrix(&self, i: i64) -> Vec<Vec<i64>> {
        let empty = Vec::new();
        let src = self.tags.get(&i).unwrap_or(&empty);
        let tgt = self.tags.get(&(i - 1)).unwrap_or(&empty);
        tgt.iter().map(|t| src.iter().map(|s| self.sign(s, t).unwrap_or(0)).collect()).collect()
    }

    /// Localizing at a unit makes the complex contractible.
    pub fn has_unit_element(&self) -> bool {
        self.elems.iter().any(|x| self.ring.unit_inverse(x).is_some())
    }

    /// Acyclic exactly when the elements generate the unit ideal.
    pub fn is_acyclic(&self) -> bool {
        if self.elems.is_empty() {
            return false;
        }
        let row = Matrix::from_rows(vec![self.elems.clone()], self.elems.len()).expect("one row");
        self.has_unit_element() || self.ring.coker_is_zero(1, &row)
    }
}
