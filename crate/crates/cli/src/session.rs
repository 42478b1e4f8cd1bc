//! Loading a parsed document against its ring and running its commands.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use suppcalc::adic::{is_adically_finite, is_adically_finite_dvr, prime_filtration, verify_adic_conditions, verify_detection};
use suppcalc::complexes::{koszul_complex, ChainComplex};
use suppcalc::derived::{derived_hom, derived_tensor, free_resolution, local_cohomology_fiber, DerivedInput, FpModule};
use suppcalc::dvrcalc::{self, render_primes, DvrExpr, DvrIdeal, DvrObject};
use suppcalc::exactla::{Integers, Matrix, PrimeField, RationalField, ScalarField};
use suppcalc::grobner::{Ideal, MonomialOrder, PolyRing, PrimeIdeal};
use suppcalc::ring::{ModuleAlgebra, Ring};
use suppcalc::support::{
    bass_numbers, cosupp_membership, cosupp_set, default_ext_bound, supp_fg, supp_membership, verify_support_identities,
    IdentityOutcome, SupportSuite,
};

use crate::report::{Report, RunError, Status};
use crate::syntax::{Command, ComplexDef, Document, FieldDecl, IdealRef, MatrixLit, ModuleDef, RingDecl, Statement};

/// Defaults that apply to commands which leave them unspecified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub seed: u64,
    pub bound: Option<usize>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { seed: 0, bound: None }
    }
}

pub const DEFAULT_COUNT: usize = 25;

/// Rings a session can be declared over.
pub trait SessionRing: ModuleAlgebra {
    fn parse_elem(&self, text: &str) -> suppcalc::Result<Self::Elem>;

    /// Commands that need polynomial structure.
    fn run_poly(&self, env: &Env<Self>, cmd: &Command, opts: &RunOptions) -> Result<Report, RunError> {
        let _ = (env, opts);
        Err(RunError::Usage(format!("'{cmd}' needs a polynomial ring")))
    }
}

impl SessionRing for Integers {
    fn parse_elem(&self, text: &str) -> suppcalc::Result<BigInt> {
        text.parse().map_err(|_| suppcalc::Error::Malformed(format!("'{text}' is not an integer")))
    }
}

impl<F: ScalarField> SessionRing for PolyRing<F> {
    fn parse_elem(&self, text: &str) -> suppcalc::Result<<Self as Ring>::Elem> {
        self.parse(text)
    }

    fn run_poly(&self, env: &Env<Self>, cmd: &Command, opts: &RunOptions) -> Result<Report, RunError> {
        run_poly_command(self, env, cmd, opts)
    }
}

/// Named objects of a loaded session.
pub struct Env<R: SessionRing> {
    pub ring: R,
    ideals: BTreeMap<String, Vec<R::Elem>>,
    objects: BTreeMap<String, DerivedInput<R>>,
}

impl<R: SessionRing> Env<R> {
    fn object(&self, name: &str) -> Result<DerivedInput<R>, RunError> {
        if name == "R" {
            return Ok(ChainComplex::unit(self.ring.clone()).into());
        }
        self.objects.get(name).cloned().ok_or_else(|| RunError::Semantic(format!("unknown object '{name}'")))
    }

    fn ideal_gens(&self, r: &IdealRef) -> Result<Vec<R::Elem>, RunError> {
        match r {
            IdealRef::Name(n) => self.ideals.get(n).cloned().ok_or_else(|| RunError::Semantic(format!("unknown ideal '{n}'"))),
            IdealRef::Inline(gens) => gens.iter().map(|g| elem(&self.ring, g)).collect(),
        }
    }
}

fn elem<R: SessionRing>(ring: &R, text: &str) -> Result<R::Elem, RunError> {
    ring.parse_elem(text).map_err(|e| RunError::Semantic(e.to_string()))
}

fn matrix<R: SessionRing>(ring: &R, m: &MatrixLit, cols_if_empty: usize) -> Result<Matrix<R::Elem>, RunError> {
    if m.rows.is_empty() {
        return Ok(Matrix::zeros(ring, 0, cols_if_empty));
    }
    let cols = m.rows[0].len();
    let rows = m
        .rows
        .iter()
        .map(|r| r.iter().map(|e| elem(ring, e)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(rows, cols).map_err(|e| RunError::Semantic(e.to_string()))
}

fn complex_from<R: SessionRing>(ring: &R, diffs: &[(i64, MatrixLit)]) -> Result<ChainComplex<R>, RunError> {
    let mut seen = BTreeMap::new();
    for (i, m) in diffs {
        if seen.insert(*i, m).is_some() {
            return Err(RunError::Semantic(format!("d_{i} given twice")));
        }
    }
    // `[]` has no rows; its column count is the row count of the next differential up.
    let mut out = BTreeMap::new();
    for (&i, m) in seen.iter().rev() {
        let cols = out.get(&(i + 1)).map(|d: &Matrix<R::Elem>| d.nrows()).unwrap_or(0);
        out.insert(i, matrix(ring, m, cols)?);
    }
    ChainComplex::from_differentials(ring.clone(), out).map_err(|e| RunError::Semantic(e.to_string()))
}

/// Builds every named definition, checking names, references and complexes up front.
fn load<R: SessionRing>(ring: R, doc: &Document) -> Result<Env<R>, RunError> {
    let mut env = Env { ring: ring.clone(), ideals: BTreeMap::new(), objects: BTreeMap::new() };
    for s in &doc.statements {
        match s {
            Statement::Ideal { name, gens } => {
                let g = gens.iter().map(|t| elem(&ring, t)).collect::<Result<Vec<_>, _>>()?;
                env.ideals.insert(name.clone(), g);
            }
            Statement::Module { name, def } => {
                let m = match def {
                    ModuleDef::Free(r) => FpModule::free(ring.clone(), *r),
                    ModuleDef::Coker(lit) => FpModule::new(ring.clone(), matrix(&ring, lit, 0)?),
                };
                env.objects.insert(name.clone(), m.into());
            }
            Statement::Complex { name, def } => {
                let c = match def {
                    ComplexDef::Diffs(d) => complex_from(&ring, d)?,
                    ComplexDef::Koszul(elems) => {
                        let e = elems.iter().map(|t| elem(&ring, t)).collect::<Result<Vec<_>, _>>()?;
                        koszul_complex(&ring, &e)
                    }
                };
                env.objects.insert(name.clone(), c.into());
            }
            _ => {}
        }
    }
    Ok(env)
}

fn check_names(doc: &Document) -> Result<(), RunError> {
    let mut seen = std::collections::BTreeSet::new();
    for s in &doc.statements {
        let name = match s {
            Statement::Ideal { name, .. } | Statement::Module { name, .. } | Statement::Complex { name, .. } | Statement::Dvr { name, .. } => name,
            _ => continue,
        };
        if name == "R" || !seen.insert(name.clone()) {
            return Err(RunError::Semantic(format!("name '{name}' is defined twice or reserved")));
        }
    }
    Ok(())
}

fn render_map<V: std::fmt::Display>(prefix: &str, m: &BTreeMap<i64, V>) -> Vec<(String, String)> {
    m.iter().map(|(i, v)| (format!("{prefix}_{i}"), v.to_string())).collect()
}

fn outcomes_report(command: String, outcomes: &[IdentityOutcome], extra: Vec<(String, String)>) -> Report {
    let mut entries = extra;
    for o in outcomes {
        entries.push((format!("{}.checked", o.name), o.checked.to_string()));
        entries.push((format!("{}.result", o.name), if o.passed() { "pass".into() } else { "fail".into() }));
        for (k, f) in o.failures.iter().enumerate() {
            entries.push((format!("{}.failure_{k}", o.name), f.clone()));
        }
    }
    let status = if outcomes.iter().all(|o| o.passed()) { Status::Ok } else { Status::VerificationFailed };
    Report { command, entries, status }
}

fn generic_command<R: SessionRing>(env: &Env<R>, cmd: &Command) -> Result<Option<Report>, RunError> {
    let ring = &env.ring;
    let entries = match cmd {
        Command::Homology { x } => {
            let h = env.object(x)?.homology();
            let inv: BTreeMap<i64, String> = h.iter().map(|(i, m)| (*i, m.invariants().to_string())).collect();
            if inv.is_empty() {
                vec![("homology".to_string(), "0".to_string())]
            } else {
                render_map("H", &inv)
            }
        }
        Command::Resolve { x, length } => {
            let b = free_resolution(&env.object(x)?, length.unwrap_or(8));
            let mut e: Vec<(String, String)> = b.resolution.ranks().iter().map(|(i, r)| (format!("rank_{i}"), r.to_string())).collect();
            e.push(("complete".into(), b.complete.to_string()));
            e
        }
        Command::Tor { m, n, lo, hi } => {
            let t = derived_tensor(&env.object(m)?, &env.object(n)?, *lo..=*hi)?;
            let inv: BTreeMap<i64, String> = t.iter().map(|(i, m)| (*i, m.invariants().to_string())).collect();
            render_map("tor", &inv)
        }
        Command::Ext { m, n, lo, hi } => {
            // Ext^i sits in homological degree -i of RHom.
            let h = derived_hom(&env.object(m)?, &env.object(n)?, -*hi..=-*lo)?;
            let inv: BTreeMap<i64, String> = h.iter().map(|(i, m)| (-*i, m.invariants().to_string())).collect();
            render_map("ext", &inv)
        }
        _ => return Ok(None),
    };
    let _ = ring;
    Ok(Some(Report { command: cmd.to_string(), entries, status: Status::Ok }))
}

fn prime<F: ScalarField>(env: &Env<PolyRing<F>>, r: &IdealRef) -> Result<PrimeIdeal<F>, RunError> {
    Ok(PrimeIdeal::certify(Ideal::new(&env.ring, env.ideal_gens(r)?))?)
}

fn run_poly_command<F: ScalarField>(
    ring: &PolyRing<F>,
    env: &Env<PolyRing<F>>,
    cmd: &Command,
    opts: &RunOptions,
) -> Result<Report, RunError> {
    let ideal = |r: &IdealRef| -> Result<Ideal<F>, RunError> { Ok(Ideal::new(ring, env.ideal_gens(r)?)) };
    let mut status = Status::Ok;
    let entries: Vec<(String, String)> = match cmd {
        Command::Supp { x } => vec![("supp".into(), supp_fg(&env.object(x)?).to_string())],
        Command::SuppMember { prime: p, x } => {
            let v = supp_membership(&prime(env, p)?, &env.object(x)?)?;
            let mut e = vec![("member".to_string(), v.member.to_string())];
            if let Some(w) = v.witness {
                e.push(("witness_degree".into(), w.degree.to_string()));
                e.push(("witness".into(), w.invariant));
            }
            e
        }
        Command::CosuppMember { prime: p, x, bound } => {
            let x = env.object(x)?;
            let b = bound.or(opts.bound).unwrap_or_else(|| default_ext_bound(&x));
            let v = cosupp_membership(&prime(env, p)?, &x, b)?;
            let mut e = vec![("member".to_string(), v.member.to_string()), ("bound".into(), b.to_string())];
            if let Some(w) = v.witness {
                e.push(("witness_degree".into(), w.degree.to_string()));
                e.push(("witness".into(), w.invariant));
            }
            e
        }
        Command::Cosupp { x } => vec![("cosupp".into(), cosupp_set(&env.object(x)?)?.to_string())],
        Command::LocalCohomology { a, x, at, lo, hi } => {
            let dims = local_cohomology_fiber(&prime(env, at)?, &ideal(a)?, &env.object(x)?, *lo..=*hi)?;
            render_map("fiber_dim", &dims)
        }
        Command::Adic { x, a, bound } => {
            let b = bound.or(opts.bound).unwrap_or(ring.nvars() + 1);
            let mut v = is_adically_finite(&env.object(x)?, &ideal(a)?, b)?;
            v.subject = x.clone();
            verdict_entries(&v)
        }
        Command::Filtration { x } => {
            let DerivedInput::Module(m) = env.object(x)? else {
                return Err(RunError::Usage("filtration needs a module".into()));
            };
            let f = prime_filtration(&m)?;
            let mut e = vec![("length".to_string(), f.steps.len().to_string())];
            for (k, s) in f.steps.iter().enumerate() {
                let gen = ring.render(&ring.monomial(&s.generator));
                e.push((format!("step_{k}"), format!("{gen}*e{} : R/{}", s.component, s.prime)));
            }
            e
        }
        Command::Bass { prime: p, x, lo, hi } => {
            let DerivedInput::Module(m) = env.object(x)? else {
                return Err(RunError::Usage("bass needs a module".into()));
            };
            let mu = bass_numbers(&prime(env, p)?, &m, *lo..=*hi)?;
            mu.iter().map(|(i, v)| (format!("mu_{i}"), v.to_string())).collect()
        }
        Command::Verify { suite, seed, count } => {
            let seed = seed.unwrap_or(opts.seed);
            let count = count.unwrap_or(DEFAULT_COUNT);
            let header = vec![("ring".to_string(), ring.describe()), ("seed".into(), seed.to_string()), ("count".into(), count.to_string())];
            let outcomes = match suite.as_str() {
                "support-identities" => verify_support_identities(ring, SupportSuite { seed, count })?.outcomes,
                "adic-conditions" => vec![verify_adic_conditions(ring, seed, count, opts.bound.unwrap_or(ring.nvars() + 1))?],
                "detection" => vec![verify_detection(ring, seed, count)?],
                "dvr-tables" => dvrcalc::verify_tables(&[1, 2, 3]),
                other => return Err(RunError::Usage(format!("unknown suite '{other}'"))),
            };
            let r = outcomes_report(cmd.to_string(), &outcomes, header);
            status = r.status;
            r.entries
        }
        _ => return Err(RunError::Usage(format!("'{cmd}' is not a polynomial command"))),
    };
    Ok(Report { command: cmd.to_string(), entries, status })
}

fn verdict_entries(v: &suppcalc::adic::AdicVerdict) -> Vec<(String, String)> {
    let mut e = vec![("adically_finite".to_string(), v.verdict.to_string())];
    for c in &v.conditions {
        e.push((format!("condition.{}", c.name), c.holds.to_string()));
    }
    e.push(("support_contained".into(), v.support_contained.to_string()));
    if let Some(b) = v.bound {
        e.push(("bound".into(), b.to_string()));
    }
    for (k, n) in v.notes.iter().enumerate() {
        e.push((format!("note_{k}"), n.clone()));
    }
    e
}

struct DvrState {
    complete: bool,
    objects: BTreeMap<String, DvrObject>,
}

fn dvr_eval(state: &DvrState, e: &DvrExpr) -> Result<DvrObject, RunError> {
    Ok(dvrcalc::eval(e, state.complete, &state.objects)?)
}

fn dvr_command(state: &DvrState, env_objects: &BTreeMap<String, DvrObject>, cmd: &Command) -> Result<Option<Report>, RunError> {
    let _ = env_objects;
    let entries = match cmd {
        Command::DvrEval { expr } => vec![("value".to_string(), dvr_eval(state, expr)?.to_string())],
        Command::DvrSupp { expr } => vec![("supp".to_string(), render_primes(&dvrcalc::supp(&dvr_eval(state, expr)?)))],
        Command::DvrCosupp { expr } => vec![("cosupp".to_string(), render_primes(&dvrcalc::cosupp(&dvr_eval(state, expr)?)))],
        Command::DvrAdic { ideal, expr } => {
            let a = if ideal == "m" { DvrIdeal::Max } else { DvrIdeal::Zero };
            verdict_entries(&is_adically_finite_dvr(&dvr_eval(state, expr)?, a)?)
        }
        Command::Adic { x, a: IdealRef::Name(i), .. } if state.objects.contains_key(x) && (i == "m" || i == "0") => {
            let a = if i == "m" { DvrIdeal::Max } else { DvrIdeal::Zero };
            let mut v = is_adically_finite_dvr(&state.objects[x], a)?;
            v.subject = x.clone();
            verdict_entries(&v)
        }
        _ => return Ok(None),
    };
    Ok(Some(Report { command: cmd.to_string(), entries, status: Status::Ok }))
}

fn load_dvr(doc: &Document) -> Result<DvrState, RunError> {
    let mut state = DvrState { complete: true, objects: BTreeMap::new() };
    for s in &doc.statements {
        if let Statement::Ambient { complete } = s {
            state.complete = *complete;
        }
    }
    for s in &doc.statements {
        if let Statement::Dvr { name, expr } = s {
            let v = dvrcalc::eval(expr, state.complete, &state.objects)?;
            state.objects.insert(name.clone(), v);
        }
    }
    Ok(state)
}

/// Ring-independent commands first, then generic module commands, then polynomial ones.
fn run_all<R: SessionRing>(env: Option<&Env<R>>, dvr: &DvrState, doc: &Document, opts: &RunOptions, out: &mut Vec<Report>) -> Result<(), RunError> {
    for s in &doc.statements {
        let Statement::Command(cmd) = s else { continue };
        if let Some(r) = dvr_command(dvr, &dvr.objects, cmd)? {
            out.push(r);
            continue;
        }
        if let Command::Verify { suite, .. } = cmd {
            if suite == "dvr-tables" {
                out.push(outcomes_report(cmd.to_string(), &dvrcalc::verify_tables(&[1, 2, 3]), Vec::new()));
                continue;
            }
        }
        let Some(env) = env else {
            return Err(RunError::Usage(format!("'{cmd}' needs a ring declaration")));
        };
        match generic_command(env, cmd)? {
            Some(r) => out.push(r),
            None => out.push(env.ring.run_poly(env, cmd, opts)?),
        }
    }
    Ok(())
}

fn ring_decl(doc: &Document) -> Result<Option<&RingDecl>, RunError> {
    let decls: Vec<&RingDecl> = doc
        .statements
        .iter()
        .filter_map(|s| if let Statement::Ring(r) = s { Some(r) } else { None })
        .collect();
    match decls.as_slice() {
        [] => Ok(None),
        [r] => Ok(Some(r)),
        _ => Err(RunError::Semantic("more than one ring declaration".into())),
    }
}

fn poly_ring<F: ScalarField>(field: F, vars: &[String], order: &str, relations: &[String]) -> Result<PolyRing<F>, RunError> {
    let order = match order {
        "grevlex" => MonomialOrder::Grevlex,
        "lex" => MonomialOrder::Lex,
        other => return Err(RunError::Semantic(format!("unknown monomial order '{other}'"))),
    };
    let ring = PolyRing::new(field, vars.to_vec(), order)?;
    if relations.is_empty() {
        return Ok(ring);
    }
    let rels = relations.iter().map(|r| ring.parse(r)).collect::<suppcalc::Result<Vec<_>>>()?;
    Ok(ring.quotient(&rels)?)
}

fn run_typed<R: SessionRing>(ring: Option<R>, doc: &Document, opts: &RunOptions, out: &mut Vec<Report>) -> Result<(), RunError> {
    let env = ring.map(|r| load(r, doc)).transpose()?;
    if env.is_none() && doc.statements.iter().any(|s| matches!(s, Statement::Ideal { .. } | Statement::Module { .. } | Statement::Complex { .. })) {
        return Err(RunError::Semantic("definitions need a ring declaration".into()));
    }
    let dvr = load_dvr(doc)?;
    run_all(env.as_ref(), &dvr, doc, opts, out)
}

/// Runs every command of `doc`; reports produced before an error are kept in `out`.
pub fn run_document(doc: &Document, opts: &RunOptions, out: &mut Vec<Report>) -> Result<(), RunError> {
    check_names(doc)?;
    match ring_decl(doc)? {
        None => run_typed::<Integers>(None, doc, opts, out),
        Some(RingDecl::Integers) => run_typed(Some(Integers), doc, opts, out),
        Some(RingDecl::Poly { field: FieldDecl::Rationals, vars, order, relations }) => {
            run_typed(Some(poly_ring(RationalField, vars, order, relations)?), doc, opts, out)
        }
        Some(RingDecl::Poly { field: FieldDecl::Prime(p), vars, order, relations }) => {
            run_typed(Some(poly_ring(PrimeField::new(*p)?, vars, order, relations)?), doc, opts, out)
        }
    }
}
