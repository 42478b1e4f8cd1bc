use std::cmp::Ordering;

use smallvec::SmallVec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
}

impl MonomialOrder {
    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::Grevlex => "grevlex",
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Grevlex => a.deg.cmp(&b.deg).then_with(|| {
                for (x, y) in a.exps.iter().zip(b.exps.iter()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

/// Exponent vector with cached total degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 4]>,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars), deg: 0 }
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        Monomial { exps: SmallVec::from_slice(exps), deg: exps.iter().map(|&e| e as u32).sum() }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u16; 4]> = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, deg: self.deg + other.deg }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u16; 4]> = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Monomial { exps, deg: other.deg - self.deg }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u16; 4]> = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i).collect()
    }

    /// Re-embeds into a ring whose variable `i` is this ring's variable `map[i]` (or absent).
    pub fn remap(&self, map: &[Option<usize>]) -> Monomial {
        let exps: SmallVec<[u16; 4]> = map.iter().map(|m| m.map(|j| self.exps[j]).unwrap_or(0)).collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    pub fn render(&self, vars: &[String]) -> String {
        let parts: Vec<String> = self
            .exps
            .iter()
            .zip(vars)
            .filter(|(e, _)| **e > 0)
            .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_breaks_degree_ties_from_the_last_variable() {
        let o = MonomialOrder::Grevlex;
        let x2 = Monomial::from_exps(&[2, 0, 0]);
        let xy = Monomial::from_exps(&[1, 1, 0]);
        let y2 = Monomial::from_exps(&[0, 2, 0]);
        let xz = Monomial::from_exps(&[1, 0, 1]);
        assert_eq!(o.cmp(&x2, &xy), Ordering::Greater);
        assert_eq!(o.cmp(&xy, &y2), Ordering::Greater);
        assert_eq!(o.cmp(&y2, &xz), Ordering::Greater);
        assert_eq!(o.cmp(&Monomial::from_exps(&[0, 0, 3]), &x2), Ordering::Greater);
    }

    #[test]
    fn lex_compares_first_variable_first() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&Monomial::from_exps(&[1, 0]), &Monomial::from_exps(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exps(&[2, 1]);
        let b = Monomial::from_exps(&[1, 3]);
        assert_eq!(a.lcm(&b), Monomial::from_exps(&[2, 3]));
        assert!(a.divides(&a.lcm(&b)));
        assert_eq!(a.quotient_of(&a.lcm(&b)), Monomial::from_exps(&[0, 2]));
        assert!(!a.coprime(&b));
        assert_eq!(a.render(&["x".into(), "y".into()]), "x^2*y");
    }
}
