//! Buchberger's algorithm for submodules of free modules (ideals are rank one).
//!
//! Vectors are lists of `(position, monomial, coefficient)` sorted decreasingly in
//! position-over-term order: a smaller position index is larger.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use super::monomial::{Monomial, MonomialOrder};
use crate::ring::Field;

pub type VTerm<E> = (u32, Monomial, E);

pub struct Engine<'a, F: Field> {
    field: &'a F,
    order: MonomialOrder,
}

impl<'a, F: Field> Engine<'a, F> {
    pub fn new(field: &'a F, order: MonomialOrder) -> Self {
        Engine { field, order }
    }

    pub fn cmp_sig(&self, a: (u32, &Monomial), b: (u32, &Monomial)) -> Ordering {
        b.0.cmp(&a.0).then_with(|| self.order.cmp(a.1, b.1))
    }

    /// Sorts and combines an arbitrary term list.
    pub fn normalize(&self, mut v: Vec<VTerm<F::Elem>>) -> Vec<VTerm<F::Elem>> {
        v.sort_by(|a, b| self.cmp_sig((b.0, &b.1), (a.0, &a.1)));
        let mut out: Vec<VTerm<F::Elem>> = Vec::with_capacity(v.len());
        for t in v {
            match out.last_mut() {
                Some(last) if last.0 == t.0 && last.1 == t.1 => last.2 = self.field.add(&last.2, &t.2),
                _ => out.push(t),
            }
        }
        out.retain(|t| !self.field.is_zero(&t.2));
        out
    }

    /// `a - c * m * b` where `a`, `b` are sorted.
    fn sub_mul(&self, a: &[VTerm<F::Elem>], c: &F::Elem, m: &Monomial, b: &[VTerm<F::Elem>]) -> Vec<VTerm<F::Elem>> {
        let f = self.field;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let shifted = |t: &VTerm<F::Elem>| (t.0, t.1.mul(m), f.neg(&f.mul(c, &t.2)));
        while i < a.len() && j < b.len() {
            let bm = b[j].1.mul(m);
            match self.cmp_sig((a[i].0, &a[i].1), (b[j].0, &bm)) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0, bm, f.neg(&f.mul(c, &b[j].2))));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = f.sub(&a[i].2, &f.mul(c, &b[j].2));
                    if !f.is_zero(&v) {
                        out.push((a[i].0, bm, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(shifted));
        out
    }

    /// Full reduction of `v` by `basis` (all elements monic).
    pub fn reduce(&self, v: Vec<VTerm<F::Elem>>, basis: &[Vec<VTerm<F::Elem>>]) -> Vec<VTerm<F::Elem>> {
        let mut done = Vec::new();
        let mut rest = v;
        let mut start = 0;
        while start < rest.len() {
            let (p, m, c) = &rest[start];
            let divisor = basis.iter().find(|g| g[0].0 == *p && g[0].1.divides(m));
            match divisor {
                Some(g) => {
                    let q = g[0].1.quotient_of(m);
                    let coef = self.field.div(c, &g[0].2);
                    rest = self.sub_mul(&rest[start..], &coef, &q, g);
                    start = 0;
                }
                None => {
                    done.push(rest[start].clone());
                    start += 1;
                }
            }
        }
        done
    }

    fn monic(&self, mut v: Vec<VTerm<F::Elem>>) -> Vec<VTerm<F::Elem>> {
        if let Some(first) = v.first() {
            if !self.field.is_one(&first.2) {
                let inv = self.field.inv(&first.2);
                for t in v.iter_mut() {
                    t.2 = self.field.mul(&t.2, &inv);
                }
            }
        }
        v
    }

    fn spoly(&self, a: &[VTerm<F::Elem>], b: &[VTerm<F::Elem>]) -> Vec<VTerm<F::Elem>> {
        let l = a[0].1.lcm(&b[0].1);
        let ma = a[0].1.quotient_of(&l);
        let mb = b[0].1.quotient_of(&l);
        let one = self.field.one();
        let shifted_a: Vec<VTerm<F::Elem>> = a.iter().map(|t| (t.0, t.1.mul(&ma), t.2.clone())).collect();
        self.sub_mul(&shifted_a, &one, &mb, b)
    }

    /// Reduced Gröbner basis, sorted by decreasing leading signature.
    ///
    /// `rank_one` enables the coprime-leading-monomial criterion, which is only valid for ideals.
    pub fn groebner(&self, gens: Vec<Vec<VTerm<F::Elem>>>, rank_one: bool) -> Vec<Vec<VTerm<F::Elem>>> {
        let mut basis: Vec<Vec<VTerm<F::Elem>>> = Vec::new();
        let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();

        let insert = |basis: &mut Vec<Vec<VTerm<F::Elem>>>, pending: &mut BTreeSet<(usize, usize)>, h| {
            let idx = basis.len();
            let h: Vec<VTerm<F::Elem>> = h;
            for (i, g) in basis.iter().enumerate() {
                if g[0].0 == h[0].0 {
                    pending.insert((i, idx));
                }
            }
            basis.push(h);
        };

        for g in gens {
            let g = self.normalize(g);
            let r = self.reduce(g, &basis);
            if !r.is_empty() {
                insert(&mut basis, &mut pending, self.monic(r));
            }
        }

        while !pending.is_empty() {
            // normal selection: smallest lcm signature
            let &(i, j) = pending
                .iter()
                .min_by(|&&(a1, b1), &&(a2, b2)| {
                    let l1 = basis[a1][0].1.lcm(&basis[b1][0].1);
                    let l2 = basis[a2][0].1.lcm(&basis[b2][0].1);
                    self.cmp_sig((basis[a1][0].0, &l1), (basis[a2][0].0, &l2)).then((a1, b1).cmp(&(a2, b2)))
                })
                .expect("nonempty");
            pending.remove(&(i, j));
            let (li, lj) = (&basis[i][0].1, &basis[j][0].1);
            if rank_one && li.coprime(lj) {
                continue;
            }
            let l = li.lcm(lj);
            let pos = basis[i][0].0;
            let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && basis[k][0].0 == pos
                    && basis[k][0].1.divides(&l)
                    && !pending.contains(&key(i, k))
                    && !pending.contains(&key(j, k))
            });
            if chain {
                continue;
            }
            let s = self.spoly(&basis[i], &basis[j]);
            let r = self.reduce(s, &basis);
            if !r.is_empty() {
                insert(&mut basis, &mut pending, self.monic(r));
            }
        }
        self.interreduce(basis)
    }

    fn interreduce(&self, basis: Vec<Vec<VTerm<F::Elem>>>) -> Vec<Vec<VTerm<F::Elem>>> {
        let mut keep: Vec<Vec<VTerm<F::Elem>>> = Vec::new();
        for (i, g) in basis.iter().enumerate() {
            let redundant = basis.iter().enumerate().any(|(k, h)| {
                k != i && h[0].0 == g[0].0 && h[0].1.divides(&g[0].1) && (h[0].1 != g[0].1 || k < i)
            });
            if !redundant {
                keep.push(g.clone());
            }
        }
        let mut out = Vec::with_capacity(keep.len());
        for i in 0..keep.len() {
            let others: Vec<Vec<VTerm<F::Elem>>> =
                keep.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, g)| g.clone()).collect();
            let head = keep[i][0].clone();
            let tail = self.reduce(keep[i][1..].to_vec(), &others);
            let mut g = vec![head];
            g.extend(tail);
            out.push(self.monic(g));
        }
        out.sort_by(|a, b| self.cmp_sig((b[0].0, &b[0].1), (a[0].0, &a[0].1)));
        out
    }
}
