//! Bounded chain complexes of finite free modules, homologically indexed.

mod homology;
mod koszul;
pub(crate) mod ops;
mod prune;

use std::collections::BTreeMap;

pub use homology::{homology_at, induced_on_homology, is_iso_of_presented, HomologyPiece, Extent};
pub use koszul::{cech_complex, koszul_complex, LocalizedChainComplex};
pub use prune::prune_presentation;
pub(crate) use prune::prune_presentation_tracked;

use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::ring::{ModuleAlgebra, Ring};

/// `X_i` free of rank `ranks[i]`, `d_i: X_i -> X_{i-1}` an `rank(i-1) x rank(i)` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainComplex<R: Ring> {
    ring: R,
    ranks: BTreeMap<i64, usize>,
    diffs: BTreeMap<i64, Matrix<R::Elem>>,
}

impl<R: ModuleAlgebra> ChainComplex<R> {
    /// Validates shapes and `d_{i} d_{i+1} = 0`. Missing differentials are zero.
    pub fn new(ring: R, ranks: BTreeMap<i64, usize>, diffs: BTreeMap<i64, Matrix<R::Elem>>) -> Result<Self> {
        let ranks: BTreeMap<i64, usize> = ranks.into_iter().filter(|(_, r)| *r > 0).collect();
        let rank = |i: i64| ranks.get(&i).copied().unwrap_or(0);
        let mut kept = BTreeMap::new();
        for (i, d) in diffs {
            if d.shape() != (rank(i - 1), rank(i)) {
                return Err(Error::DimensionMismatch(format!(
                    "d_{i} is {}x{}, expected {}x{}",
                    d.nrows(),
                    d.ncols(),
                    rank(i - 1),
                    rank(i)
                )));
            }
            if !d.is_zero(&ring) {
                kept.insert(i, d);
            }
        }
        let c = ChainComplex { ring, ranks, diffs: kept };
        c.check_square_zero()?;
        Ok(c)
    }

    /// Infers ranks from the differentials (`d_i` has `rank(i)` columns, `rank(i-1)` rows).
    pub fn from_differentials(ring: R, diffs: BTreeMap<i64, Matrix<R::Elem>>) -> Result<Self> {
        let mut ranks: BTreeMap<i64, usize> = BTreeMap::new();
        let mut set = |i: i64, r: usize| -> Result<()> {
            match ranks.get(&i) {
                Some(&old) if old != r => Err(Error::DimensionMismatch(format!(
                    "degree {i} has rank {old} from one differential and {r} from another"
                ))),
                _ => {
                    ranks.insert(i, r);
                    Ok(())
                }
            }
        };
        for (i, d) in &diffs {
            set(*i, d.ncols())?;
            set(*i - 1, d.nrows())?;
        }
        ChainComplex::new(ring, ranks, diffs)
    }

    fn check_square_zero(&self) -> Result<()> {
        for (i, d) in &self.diffs {
            if let Some(next) = self.diffs.get(&(i - 1)) {
                if !next.mul(&self.ring, d).is_zero(&self.ring) {
                    return Err(Error::NotAComplex(format!("d_{} * d_{} is nonzero", i - 1, i)));
                }
            }
        }
        Ok(())
    }

    pub fn zero(ring: R) -> Self {
        ChainComplex { ring, ranks: BTreeMap::new(), diffs: BTreeMap::new() }
    }

    /// `R^rank` concentrated in one degree.
    pub fn free_module(ring: R, rank: usize, degree: i64) -> Self {
        let mut ranks = BTreeMap::new();
        if rank > 0 {
            ranks.insert(degree, rank);
        }
        ChainComplex { ring, ranks, diffs: BTreeMap::new() }
    }

    /// The ring itself in degree 0.
    pub fn unit(ring: R) -> Self {
        Self::free_module(ring, 1, 0)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn rank(&self, i: i64) -> usize {
        self.ranks.get(&i).copied().unwrap_or(0)
    }

    pub fn ranks(&self) -> &BTreeMap<i64, usize> {
        &self.ranks
    }

    /// `d_i`, materialized as a zero matrix when absent.
    pub fn d(&self, i: i64) -> Matrix<R::Elem> {
        match self.diffs.get(&i) {
            Some(d) => d.clone(),
            None => Matrix::zeros(&self.ring, self.rank(i - 1), self.rank(i)),
        }
    }

    pub fn differentials(&self) -> &BTreeMap<i64, Matrix<R::Elem>> {
        &self.diffs
    }

    /// Lowest and highest degrees with nonzero terms.
    pub fn span(&self) -> Option<(i64, i64)> {
        Some((*self.ranks.keys().next()?, *self.ranks.keys().next_back()?))
    }

    pub fn is_zero_complex(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.values().sum()
    }
}

/// Degree-preserving map `source -> target` commuting with the differentials.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainMap<R: Ring> {
    source: ChainComplex<R>,
    target: ChainComplex<R>,
    components: BTreeMap<i64, Matrix<R::Elem>>,
}

impl<R: ModuleAlgebra> ChainMap<R> {
    pub fn new(
        source: ChainComplex<R>,
        target: ChainComplex<R>,
        components: BTreeMap<i64, Matrix<R::Elem>>,
    ) -> Result<Self> {
        if source.ring != target.ring {
            return Err(Error::RingMismatch("chain map between complexes over different rings".into()));
        }
        let ring = source.ring.clone();
        let mut comps = BTreeMap::new();
        for (i, f) in components {
            if f.shape() != (target.rank(i), source.rank(i)) {
                return Err(Error::DimensionMismatch(format!(
                    "component {i} is {}x{}, expected {}x{}",
                    f.nrows(),
                    f.ncols(),
                    target.rank(i),
                    source.rank(i)
                )));
            }
            if !f.is_zero(&ring) {
                comps.insert(i, f);
            }
        }
        let m = ChainMap { source, target, components: comps };
        let degrees: Vec<i64> = m.source.ranks.keys().chain(m.target.ranks.keys()).copied().collect();
        for &i in &degrees {
            let lhs = m.target.d(i).mul(&ring, &m.component(i));
            let rhs = m.component(i - 1).mul(&ring, &m.source.d(i));
            if lhs != rhs {
                return Err(Error::NotAComplex(format!("chain map does not commute with d_{i}")));
            }
        }
        Ok(m)
    }

    pub fn identity(c: &ChainComplex<R>) -> Self {
        let comps = c.ranks.iter().map(|(&i, &r)| (i, Matrix::identity(&c.ring, r))).collect();
        ChainMap { source: c.clone(), target: c.clone(), components: comps }
    }

    /// Multiplication by a ring element in every degree.
    pub fn scalar(c: &ChainComplex<R>, s: &R::Elem) -> Self {
        let comps: BTreeMap<i64, Matrix<R::Elem>> = c
            .ranks
            .iter()
            .map(|(&i, &r)| (i, Matrix::scalar(&c.ring, r, s)))
            .filter(|(_, m)| !m.is_zero(&c.ring))
            .collect();
        ChainMap { source: c.clone(), target: c.clone(), components: comps }
    }

    pub fn source(&self) -> &ChainComplex<R> {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex<R> {
        &self.target
    }

    pub fn component(&self, i: i64) -> Matrix<R::Elem> {
        match self.components.get(&i) {
            Some(f) => f.clone(),
            None => Matrix::zeros(&self.source.ring, self.target.rank(i), self.source.rank(i)),
        }
    }

    pub fn compose(&self, after: &ChainMap<R>) -> Result<ChainMap<R>> {
        if after.source != self.target {
            return Err(Error::DimensionMismatch("composition of non-composable chain maps".into()));
        }
        let ring = self.source.ring.clone();
        let comps = self
            .source
            .ranks
            .keys()
            .map(|&i| (i, after.component(i).mul(&ring, &self.component(i))))
            .collect();
        ChainMap::new(self.source.clone(), after.target.clone(), comps)
    }
}

#[cfg(test)]
mod tests;
