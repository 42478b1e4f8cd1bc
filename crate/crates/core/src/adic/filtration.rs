//! Prime filtrations `0 = N_0 ⊆ … ⊆ N_t = M` of modules presented by monomials.

use crate::derived::FpModule;
use crate::error::{Error, Result};
use crate::exactla::ScalarField;
use crate::grobner::{Ideal, PolyRing, PrimeIdeal};
use crate::ring::Ring;

type Exps = Vec<u16>;

/// `N_i = N_{i-1} + R · generator · e_component`, with `N_i / N_{i-1} ≅ R/prime`.
#[derive(Debug, Clone)]
pub struct FiltrationStep<F: ScalarField> {
    pub component: usize,
    pub generator: Exps,
    pub prime: PrimeIdeal<F>,
}

#[derive(Debug, Clone)]
pub struct PrimeFiltration<F: ScalarField> {
    pub module: FpModule<PolyRing<F>>,
    pub steps: Vec<FiltrationStep<F>>,
}

impl<F: ScalarField> PrimeFiltration<F> {
    pub fn primes(&self) -> Vec<&PrimeIdeal<F>> {
        self.steps.iter().map(|s| &s.prime).collect()
    }
}

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minimalize(mut gens: Vec<Exps>) -> Vec<Exps> {
    gens.sort_by_key(|g| (g.iter().map(|&e| e as u32).sum::<u32>(), g.clone()));
    gens.dedup();
    let mut out: Vec<Exps> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| divides(h, &g)) {
            out.push(g);
        }
    }
    out
}

fn colon(j: &[Exps], u: &[u16]) -> Vec<Exps> {
    minimalize(j.iter().map(|g| g.iter().zip(u).map(|(a, b)| a.saturating_sub(*b)).collect()).collect())
}

/// The variable index if `g` is a single variable.
fn as_variable(g: &[u16]) -> Option<usize> {
    let nz: Vec<usize> = (0..g.len()).filter(|&i| g[i] > 0).collect();
    (nz.len() == 1 && g[nz[0]] == 1).then(|| nz[0])
}

/// A monomial `u ∉ J` with `(J : u)` generated by variables. Walks up from `u = 1`: while the
/// colon has a non-linear minimal generator `g`, multiply `u` by `g / x_i` for the last variable
/// `x_i` dividing `g`; the colon then contains `x_i` and strictly grows.
fn associated_step(j: &[Exps], n: usize) -> (Exps, Vec<usize>) {
    let mut u = vec![0u16; n];
    loop {
        let c = colon(j, &u);
        match c.iter().find(|g| as_variable(g).is_none()) {
            None => {
                let mut vars: Vec<usize> = c.iter().filter_map(|g| as_variable(g)).collect();
                vars.sort_unstable();
                return (u, vars);
            }
            Some(g) => {
                let i = (0..n).rev().find(|&i| g[i] > 0).expect("non-linear generator is not 1");
                for k in 0..n {
                    u[k] += g[k] - u16::from(k == i);
                }
            }
        }
    }
}

fn monomial_exps<F: ScalarField>(p: &crate::grobner::Poly<F::Elem>) -> Option<Exps> {
    match p.terms() {
        [(m, _)] => Some(m.exps().to_vec()),
        _ => None,
    }
}

/// Per-generator monomial ideals of a module whose relations each touch one generator.
fn monomial_components<F: ScalarField>(m: &FpModule<PolyRing<F>>) -> Result<Vec<Vec<Exps>>> {
    let ring = m.ring();
    let mut base = Vec::new();
    for r in ring.relations() {
        base.push(monomial_exps::<F>(r).ok_or_else(|| Error::NotMonomial(format!("ring relation {}", ring.render(r))))?);
    }
    let mut comps = vec![base; m.ngens()];
    let rels = m.relations();
    for c in 0..rels.ncols() {
        let nz: Vec<usize> = (0..rels.nrows()).filter(|&r| !rels.get(r, c).is_zero()).collect();
        match nz.as_slice() {
            [] => {}
            [r] => {
                let e = monomial_exps::<F>(rels.get(*r, c))
                    .ok_or_else(|| Error::NotMonomial(format!("relation entry {}", ring.render(rels.get(*r, c)))))?;
                comps[*r].push(e);
            }
            _ => return Err(Error::NotMonomial(format!("relation {c} involves several generators"))),
        }
    }
    Ok(comps.into_iter().map(minimalize).collect())
}

/// Checks `N_i / N_{i-1} ≅ R/p` via Gröbner bases in the free ambient, independently of the
/// combinatorial colon: `p·u ⊆ J` gives the surjection `R/p -> N_i/N_{i-1}`, and
/// `(J ∩ (u)) / u ⊆ p` makes it injective.
fn verify_step<F: ScalarField>(free: &PolyRing<F>, j: &[Exps], u: &[u16], vars: &[usize]) -> Result<()> {
    let jid = Ideal::new(free, j.iter().map(|g| free.monomial(g)).collect());
    let um = free.monomial(u);
    if jid.contains(&um) {
        return Err(Error::PreconditionFailed("filtration generator lies in the previous step".into()));
    }
    for &v in vars {
        if !jid.contains(&free.mul_free(&free.var(v), &um)) {
            return Err(Error::PreconditionFailed(format!("x{v} does not kill the filtration quotient")));
        }
    }
    let p = Ideal::of_vars(free, vars);
    let meet = jid.intersection(&Ideal::new(free, vec![um.clone()]))?;
    for g in meet.gens() {
        let q = free
            .divide_exact(g, &um)
            .ok_or_else(|| Error::PreconditionFailed("intersection with (u) not divisible by u".into()))?;
        if !p.contains(&q) {
            return Err(Error::PreconditionFailed("annihilator of the filtration quotient exceeds the prime".into()));
        }
    }
    Ok(())
}

/// A verified prime filtration. Components are filtered in order; within one, each step adds
/// the monomial found by [`associated_step`], which is deterministic.
pub fn prime_filtration<F: ScalarField>(m: &FpModule<PolyRing<F>>) -> Result<PrimeFiltration<F>> {
    let ring = m.ring();
    let free = ring.free();
    let n = ring.nvars();
    let ann = m.annihilator();
    let mut steps = Vec::new();
    for (component, mut j) in monomial_components(m)?.into_iter().enumerate() {
        while !j.iter().any(|g| g.iter().all(|&e| e == 0)) {
            let (u, vars) = associated_step(&j, n);
            verify_step(&free, &j, &u, &vars)?;
            let prime = PrimeIdeal::of_vars(ring, &vars)?;
            if !prime.contains_ideal(&ann) {
                return Err(Error::PreconditionFailed(format!("filtration prime {prime} is outside the support")));
            }
            steps.push(FiltrationStep { component, generator: u.clone(), prime });
            j.push(u);
            j = minimalize(j);
        }
    }
    Ok(PrimeFiltration { module: m.clone(), steps })
}
