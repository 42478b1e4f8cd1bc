//! Closed-form derived calculus over a DVR `R` with fraction field `Q`, injective hull `E`
//! of the residue field, and torsion modules `T(n) = R/(t^n)`.
//!
//! Objects are finite direct sums of shifted basis objects. The tables are validated in the
//! tests against torsion computations over `k[t]` and against the adjunction, Matlis duality
//! and support identities on every basis pair or triple.

mod expr;

use std::collections::BTreeSet;
use std::fmt;

pub use expr::{eval, parse_expr, DvrExpr};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    R,
    Q,
    E,
    T(u32),
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::R => write!(f, "R"),
            Kind::Q => write!(f, "Q"),
            Kind::E => write!(f, "E"),
            Kind::T(n) => write!(f, "T({n})"),
        }
    }
}

/// The two primes of a DVR.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DvrPrime {
    Zero,
    Max,
}

impl fmt::Display for DvrPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DvrPrime::Zero => write!(f, "0"),
            DvrPrime::Max => write!(f, "m"),
        }
    }
}

pub type PrimeSet = BTreeSet<DvrPrime>;

pub fn render_primes(s: &PrimeSet) -> String {
    let parts: Vec<String> = s.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

/// The ideals of a DVR that are radical: `0` and `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DvrIdeal {
    Zero,
    Max,
}

/// `⊕ Σ^{shift} kind`, kept sorted; the empty sum is the zero object.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DvrObject {
    summands: Vec<(Kind, i64)>,
    complete: bool,
}

impl DvrObject {
    pub fn zero(complete: bool) -> Self {
        DvrObject { summands: Vec::new(), complete }
    }

    pub fn basis(kind: Kind, complete: bool) -> Result<Self> {
        if kind == Kind::T(0) {
            return Err(Error::Malformed("T(n) needs n >= 1".into()));
        }
        Ok(DvrObject { summands: vec![(kind, 0)], complete })
    }

    pub fn from_summands(mut summands: Vec<(Kind, i64)>, complete: bool) -> Result<Self> {
        if summands.iter().any(|(k, _)| *k == Kind::T(0)) {
            return Err(Error::Malformed("T(n) needs n >= 1".into()));
        }
        summands.sort();
        Ok(DvrObject { summands, complete })
    }

    pub fn summands(&self) -> &[(Kind, i64)] {
        &self.summands
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn shift(&self, n: i64) -> Self {
        let summands = self.summands.iter().map(|&(k, s)| (k, s + n)).collect();
        DvrObject { summands, complete: self.complete }
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut s = self.summands.clone();
        s.extend(other.summands.iter().copied());
        DvrObject::from_summands(s, self.complete)
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.complete != other.complete {
            return Err(Error::AmbientMismatch { left: ambient_name(self.complete), right: ambient_name(other.complete) });
        }
        Ok(())
    }

    fn collect(parts: Vec<(Kind, i64)>, complete: bool) -> Self {
        DvrObject::from_summands(parts, complete).expect("tables never produce T(0)")
    }
}

fn ambient_name(complete: bool) -> String {
    if complete { "complete DVR" } else { "incomplete DVR" }.to_string()
}

impl fmt::Display for DvrObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |&(k, s): &(Kind, i64)| if s == 0 { k.to_string() } else { format!("shift({s}, {k})") };
        match self.summands.len() {
            0 => write!(f, "0"),
            1 => write!(f, "{}", term(&self.summands[0])),
            _ => {
                let parts: Vec<String> = self.summands.iter().map(term).collect();
                write!(f, "sum({})", parts.join(", "))
            }
        }
    }
}

/// `A ⊗^L B` on basis objects, as shifted basis summands.
fn tensor_basis(a: Kind, b: Kind) -> Vec<(Kind, i64)> {
    use Kind::*;
    match (a, b) {
        (R, x) | (x, R) => vec![(x, 0)],
        (Q, Q) => vec![(Q, 0)],
        (Q, E) | (E, Q) | (Q, T(_)) | (T(_), Q) => vec![],
        (E, E) => vec![(E, 1)],
        (E, T(n)) | (T(n), E) => vec![(T(n), 1)],
        (T(x), T(y)) => {
            let m = x.min(y);
            vec![(T(m), 0), (T(m), 1)]
        }
    }
}

/// `RHom(A, B)` on basis objects; `Err` for entries that depend on `R` being complete.
fn rhom_basis(a: Kind, b: Kind, complete: bool) -> Result<Vec<(Kind, i64)>> {
    use Kind::*;
    let needs_complete = |what: &str| -> Result<Vec<(Kind, i64)>> {
        Err(Error::IncompleteAmbient(format!("RHom({a}, {b}) involves the completion of R ({what})")))
    };
    Ok(match (a, b) {
        (R, x) => vec![(x, 0)],
        (Q, Q) => vec![(Q, 0)],
        (Q, E) if complete => vec![(Q, 0)],
        (Q, E) => return needs_complete("Hom(Q, E) is the fraction field of the completion"),
        (Q, R) if complete => vec![],
        (Q, R) => return needs_complete("Ext^1(Q, R) is nonzero and not a basis object"),
        (Q, T(_)) => vec![],
        (E, E) if complete => vec![(R, 0)],
        (E, E) => return needs_complete("Hom(E, E) is the completion"),
        (E, R) if complete => vec![(R, -1)],
        (E, R) => return needs_complete("Ext^1(E, R) is the completion"),
        (E, Q) => vec![],
        (E, T(n)) => vec![(T(n), -1)],
        (T(n), R) => vec![(T(n), -1)],
        (T(_), Q) => vec![],
        (T(n), E) => vec![(T(n), 0)],
        (T(x), T(y)) => {
            let m = x.min(y);
            vec![(T(m), 0), (T(m), -1)]
        }
    })
}

pub fn tensor(a: &DvrObject, b: &DvrObject) -> Result<DvrObject> {
    a.check_ambient(b)?;
    let mut out = Vec::new();
    for &(ka, sa) in &a.summands {
        for &(kb, sb) in &b.summands {
            out.extend(tensor_basis(ka, kb).into_iter().map(|(k, s)| (k, s + sa + sb)));
        }
    }
    Ok(DvrObject::collect(out, a.complete))
}

/// `RHom(Σ^a A, Σ^b B) = Σ^{b-a} RHom(A, B)`, additive in both arguments.
pub fn rhom(a: &DvrObject, b: &DvrObject) -> Result<DvrObject> {
    a.check_ambient(b)?;
    let mut out = Vec::new();
    for &(ka, sa) in &a.summands {
        for &(kb, sb) in &b.summands {
            out.extend(rhom_basis(ka, kb, a.complete)?.into_iter().map(|(k, s)| (k, s + sb - sa)));
        }
    }
    Ok(DvrObject::collect(out, a.complete))
}

/// `RΓ_m R = Σ^{-1} E`, from the Čech complex `0 -> R -> Q -> 0`.
pub fn gamma_of_ring(complete: bool) -> DvrObject {
    DvrObject::collect(vec![(Kind::E, -1)], complete)
}

/// `RΓ_a`: the identity for `a = 0`; for `a = m`, `RΓ_m X = RΓ_m R ⊗^L X`.
pub fn gamma(a: &DvrObject, ideal: DvrIdeal) -> Result<DvrObject> {
    match ideal {
        DvrIdeal::Zero => Ok(a.clone()),
        DvrIdeal::Max => tensor(&gamma_of_ring(a.complete), a),
    }
}

/// `LΛ_a`: the identity for `a = 0`; for `a = m`, `LΛ_m X = RHom(RΓ_m R, X)`.
pub fn lambda(a: &DvrObject, ideal: DvrIdeal) -> Result<DvrObject> {
    match ideal {
        DvrIdeal::Zero => Ok(a.clone()),
        DvrIdeal::Max => rhom(&gamma_of_ring(a.complete), a),
    }
}

fn kind_supp(k: Kind) -> PrimeSet {
    match k {
        Kind::R => [DvrPrime::Zero, DvrPrime::Max].into(),
        Kind::Q => [DvrPrime::Zero].into(),
        Kind::E | Kind::T(_) => [DvrPrime::Max].into(),
    }
}

fn kind_cosupp(k: Kind, complete: bool) -> PrimeSet {
    match k {
        Kind::R if complete => [DvrPrime::Max].into(),
        Kind::R => [DvrPrime::Zero, DvrPrime::Max].into(),
        Kind::Q => [DvrPrime::Zero].into(),
        Kind::E => [DvrPrime::Zero, DvrPrime::Max].into(),
        Kind::T(_) => [DvrPrime::Max].into(),
    }
}

pub fn supp(a: &DvrObject) -> PrimeSet {
    a.summands.iter().flat_map(|&(k, _)| kind_supp(k)).collect()
}

pub fn cosupp(a: &DvrObject) -> PrimeSet {
    a.summands.iter().flat_map(|&(k, _)| kind_cosupp(k, a.complete)).collect()
}

/// Finitely generated homology for `a = 0`; artinian homology supported at `m` for `a = m`.
pub fn adically_finite(a: &DvrObject, ideal: DvrIdeal) -> bool {
    a.summands.iter().all(|&(k, _)| match ideal {
        DvrIdeal::Zero => matches!(k, Kind::R | Kind::T(_)),
        DvrIdeal::Max => matches!(k, Kind::E | Kind::T(_)),
    })
}

/// The four basis kinds with a representative torsion length.
pub fn basis_kinds(torsion: &[u32]) -> Vec<Kind> {
    let mut v = vec![Kind::R, Kind::Q, Kind::E];
    v.extend(torsion.iter().map(|&n| Kind::T(n)));
    v
}

#[cfg(test)]
mod tests;

/// Runtime self-check of the tables on shifted basis objects over a complete ambient:
/// adjunction, commutativity, the support identities and the torsion/completion identities.
pub fn verify_tables(torsion: &[u32]) -> Vec<crate::support::IdentityOutcome> {
    use crate::support::IdentityOutcome;
    let mut basis = Vec::new();
    for k in basis_kinds(torsion) {
        for s in [-1, 0, 1] {
            basis.push(DvrObject::collect(vec![(k, s)], true));
        }
    }
    let mut out: Vec<IdentityOutcome> = ["adjunction", "commutativity", "supp-tensor", "cosupp-rhom", "gamma-lambda"]
        .iter()
        .map(|&name| IdentityOutcome { name, checked: 0, failures: Vec::new() })
        .collect();
    let mut record = |i: usize, ok: Result<bool>, what: String| {
        out[i].checked += 1;
        if !matches!(ok, Ok(true)) {
            out[i].failures.push(what);
        }
    };
    let meet = |a: PrimeSet, b: PrimeSet| a.intersection(&b).copied().collect::<PrimeSet>();
    let m: PrimeSet = [DvrPrime::Max].into();
    for a in &basis {
        for b in &basis {
            for c in &basis {
                let ok = tensor(a, b).and_then(|ab| Ok(rhom(&ab, c)? == rhom(a, &rhom(b, c)?)?));
                record(0, ok, format!("RHom({a} ⊗ {b}, {c})"));
            }
            record(1, tensor(a, b).and_then(|ab| Ok(ab == tensor(b, a)?)), format!("{a} ⊗ {b}"));
            record(2, tensor(a, b).map(|ab| supp(&ab) == meet(supp(a), supp(b))), format!("supp({a} ⊗ {b})"));
            record(3, rhom(a, b).map(|h| cosupp(&h) == meet(supp(a), cosupp(b))), format!("cosupp RHom({a}, {b})"));
        }
        let ok = (|| -> Result<bool> {
            let g = gamma(a, DvrIdeal::Max)?;
            let l = lambda(a, DvrIdeal::Max)?;
            Ok(supp(&g) == meet(supp(a), m.clone())
                && cosupp(&l) == meet(cosupp(a), m.clone())
                && gamma(&l, DvrIdeal::Max)? == g
                && lambda(&g, DvrIdeal::Max)? == l)
        })();
        record(4, ok, format!("Γ/Λ on {a}"));
    }
    out
}
