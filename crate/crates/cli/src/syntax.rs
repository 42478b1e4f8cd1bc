//! Session documents: a `;`-terminated statement language with `#` line comments.
//!
//! Ring elements are kept as whitespace-free source text and checked when the document is
//! loaded against its ring, so printing is canonical and `print(parse(print(d))) == print(d)`.

use std::fmt;

use suppcalc::dvrcalc::{parse_expr, DvrExpr};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at {}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for SyntaxError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldDecl {
    Rationals,
    Prime(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingDecl {
    Integers,
    Poly { field: FieldDecl, vars: Vec<String>, order: String, relations: Vec<String> },
}

/// A matrix literal; `[]` has no rows and takes its column count from context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixLit {
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleDef {
    Coker(MatrixLit),
    Free(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexDef {
    /// `d_i` keyed by `i`, in document order.
    Diffs(Vec<(i64, MatrixLit)>),
    Koszul(Vec<String>),
}

/// An ideal given by name or inline as `(f, g, ...)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealRef {
    Name(String),
    Inline(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Supp { x: String },
    SuppMember { prime: IdealRef, x: String },
    CosuppMember { prime: IdealRef, x: String, bound: Option<usize> },
    Cosupp { x: String },
    Homology { x: String },
    Resolve { x: String, length: Option<usize> },
    Tor { m: String, n: String, lo: i64, hi: i64 },
    Ext { m: String, n: String, lo: i64, hi: i64 },
    LocalCohomology { a: IdealRef, x: String, at: IdealRef, lo: i64, hi: i64 },
    Adic { x: String, a: IdealRef, bound: Option<usize> },
    Filtration { x: String },
    Bass { prime: IdealRef, x: String, lo: usize, hi: usize },
    DvrEval { expr: DvrExpr },
    DvrSupp { expr: DvrExpr },
    DvrCosupp { expr: DvrExpr },
    DvrAdic { ideal: String, expr: DvrExpr },
    Verify { suite: String, seed: Option<u64>, count: Option<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Statement {
    Ring(RingDecl),
    Ambient { complete: bool },
    Ideal { name: String, gens: Vec<String> },
    Module { name: String, def: ModuleDef },
    Complex { name: String, def: ComplexDef },
    Dvr { name: String, expr: DvrExpr },
    Command(Command),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Document {
    pub statements: Vec<Statement>,
}

fn list(items: &[String]) -> String {
    format!("({})", items.join(", "))
}

impl fmt::Display for MatrixLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| format!("[{}]", r.join(", "))).collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl fmt::Display for IdealRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealRef::Name(n) => write!(f, "{n}"),
            IdealRef::Inline(g) => write!(f, "{}", list(g)),
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |key: &str, v: Option<String>| v.map(|v| format!(" {key} {v}")).unwrap_or_default();
        match self {
            Command::Supp { x } => write!(f, "supp {x}"),
            Command::SuppMember { prime, x } => write!(f, "supp-member {prime} {x}"),
            Command::CosuppMember { prime, x, bound } => {
                write!(f, "cosupp-member {prime} {x}{}", opt("bound", bound.map(|b| b.to_string())))
            }
            Command::Cosupp { x } => write!(f, "cosupp {x}"),
            Command::Homology { x } => write!(f, "homology {x}"),
            Command::Resolve { x, length } => write!(f, "resolve {x}{}", opt("length", length.map(|b| b.to_string()))),
            Command::Tor { m, n, lo, hi } => write!(f, "tor {m} {n} window {lo} {hi}"),
            Command::Ext { m, n, lo, hi } => write!(f, "ext {m} {n} window {lo} {hi}"),
            Command::LocalCohomology { a, x, at, lo, hi } => {
                write!(f, "local-cohomology {a} {x} at {at} window {lo} {hi}")
            }
            Command::Adic { x, a, bound } => write!(f, "adic {x} {a}{}", opt("bound", bound.map(|b| b.to_string()))),
            Command::Filtration { x } => write!(f, "filtration {x}"),
            Command::Bass { prime, x, lo, hi } => write!(f, "bass {prime} {x} window {lo} {hi}"),
            Command::DvrEval { expr } => write!(f, "dvr-eval {expr}"),
            Command::DvrSupp { expr } => write!(f, "dvr-supp {expr}"),
            Command::DvrCosupp { expr } => write!(f, "dvr-cosupp {expr}"),
            Command::DvrAdic { ideal, expr } => write!(f, "dvr-adic {ideal} {expr}"),
            Command::Verify { suite, seed, count } => write!(
                f,
                "verify {suite}{}{}",
                opt("seed", seed.map(|s| s.to_string())),
                opt("count", count.map(|c| c.to_string()))
            ),
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Ring(RingDecl::Integers) => write!(f, "ring ZZ;"),
            Statement::Ring(RingDecl::Poly { field, vars, order, relations }) => {
                let field = match field {
                    FieldDecl::Rationals => "QQ".to_string(),
                    FieldDecl::Prime(p) => format!("Fp({p})"),
                };
                write!(f, "ring {field}[{}] {order}", vars.join(","))?;
                if !relations.is_empty() {
                    write!(f, " / {}", list(relations))?;
                }
                write!(f, ";")
            }
            Statement::Ambient { complete } => write!(f, "ambient {};", if *complete { "complete" } else { "incomplete" }),
            Statement::Ideal { name, gens } => write!(f, "ideal {name} = {};", list(gens)),
            Statement::Module { name, def: ModuleDef::Coker(m) } => write!(f, "module {name} = coker {m};"),
            Statement::Module { name, def: ModuleDef::Free(r) } => write!(f, "module {name} = free {r};"),
            Statement::Complex { name, def: ComplexDef::Diffs(d) } => {
                let parts: Vec<String> = d.iter().map(|(i, m)| format!("{i}: {m}")).collect();
                if parts.is_empty() {
                    write!(f, "complex {name} = {{}};")
                } else {
                    write!(f, "complex {name} = {{ {} }};", parts.join(", "))
                }
            }
            Statement::Complex { name, def: ComplexDef::Koszul(e) } => write!(f, "complex {name} = koszul{};", list(e)),
            Statement::Dvr { name, expr } => write!(f, "dvr {name} = {expr};"),
            Statement::Command(c) => write!(f, "{c};"),
        }
    }
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

fn is_word_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '-'
}

impl<'a> Cursor<'a> {
    fn error_at(&self, pos: usize, message: impl Into<String>) -> SyntaxError {
        let before = &self.src[..pos.min(self.src.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map(|l| l.chars().count()).unwrap_or(0) + 1;
        SyntaxError { line, column, message: message.into() }
    }

    fn error(&self, message: impl Into<String>) -> SyntaxError {
        self.error_at(self.pos, message)
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip(&mut self) {
        loop {
            let r = self.rest();
            let trimmed = r.trim_start();
            self.pos += r.len() - trimmed.len();
            if trimmed.starts_with('#') {
                self.pos += trimmed.find('\n').unwrap_or(trimmed.len());
            } else {
                return;
            }
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip();
        self.pos >= self.src.len()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), SyntaxError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn word(&mut self) -> Result<String, SyntaxError> {
        self.skip();
        let len: usize = self.rest().chars().take_while(|&c| is_word_char(c)).map(char::len_utf8).sum();
        if len == 0 {
            return Err(self.error("expected a word"));
        }
        let w = self.rest()[..len].to_string();
        self.pos += len;
        Ok(w)
    }

    fn keyword(&mut self, k: &str) -> Result<(), SyntaxError> {
        let at = self.pos;
        let w = self.word()?;
        if w == k {
            Ok(())
        } else {
            Err(self.error_at(at, format!("expected '{k}', found '{w}'")))
        }
    }

    fn try_keyword(&mut self, k: &str) -> bool {
        let save = self.pos;
        if self.word().ok().as_deref() == Some(k) {
            true
        } else {
            self.pos = save;
            false
        }
    }

    fn name(&mut self) -> Result<String, SyntaxError> {
        let at = self.pos;
        let w = self.word()?;
        if w.starts_with(|c: char| c.is_ascii_alphabetic()) {
            Ok(w)
        } else {
            Err(self.error_at(at, format!("'{w}' is not a name")))
        }
    }

    fn int(&mut self) -> Result<i64, SyntaxError> {
        self.skip();
        let at = self.pos;
        let neg = self.eat('-');
        let w = self.word().map_err(|_| self.error_at(at, "expected an integer"))?;
        let v: i64 = w.parse().map_err(|_| self.error_at(at, format!("'{w}' is not an integer")))?;
        Ok(if neg { -v } else { v })
    }

    fn u64(&mut self) -> Result<u64, SyntaxError> {
        self.skip();
        let at = self.pos;
        let w = self.word().map_err(|_| self.error_at(at, "expected an integer"))?;
        w.parse().map_err(|_| self.error_at(at, format!("'{w}' is not a nonnegative 64-bit integer")))
    }

    fn uint(&mut self) -> Result<usize, SyntaxError> {
        let at = self.pos;
        let v = self.int()?;
        usize::try_from(v).map_err(|_| self.error_at(at, "expected a nonnegative integer"))
    }

    /// Text up to the next top-level `,` or the closing bracket of the current group,
    /// with whitespace removed.
    fn element(&mut self) -> Result<String, SyntaxError> {
        self.skip();
        let start = self.pos;
        let mut depth = 0i32;
        let mut end = self.src.len();
        for (i, c) in self.rest().char_indices() {
            match c {
                '(' | '[' => depth += 1,
                ')' | ']' if depth == 0 => {
                    end = self.pos + i;
                    break;
                }
                ')' | ']' => depth -= 1,
                ',' if depth == 0 => {
                    end = self.pos + i;
                    break;
                }
                ';' | '{' | '}' => {
                    end = self.pos + i;
                    break;
                }
                _ => {}
            }
        }
        let text: String = self.src[start..end].chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(self.error("expected a ring element"));
        }
        self.pos = end;
        Ok(text)
    }

    /// `( e, e, ... )`, possibly empty.
    fn element_list(&mut self) -> Result<Vec<String>, SyntaxError> {
        self.expect('(')?;
        let mut out = Vec::new();
        if self.eat(')') {
            return Ok(out);
        }
        loop {
            out.push(self.element()?);
            if self.eat(')') {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    fn matrix(&mut self) -> Result<MatrixLit, SyntaxError> {
        self.expect('[')?;
        let mut rows = Vec::new();
        if self.eat(']') {
            return Ok(MatrixLit { rows });
        }
        loop {
            self.expect('[')?;
            let mut row = Vec::new();
            if !self.eat(']') {
                loop {
                    row.push(self.element()?);
                    if self.eat(']') {
                        break;
                    }
                    self.expect(',')?;
                }
            }
            rows.push(row);
            if self.eat(']') {
                return Ok(MatrixLit { rows });
            }
            self.expect(',')?;
        }
    }

    fn ideal_ref(&mut self) -> Result<IdealRef, SyntaxError> {
        if self.peek() == Some('(') {
            Ok(IdealRef::Inline(self.element_list()?))
        } else {
            Ok(IdealRef::Name(self.word()?))
        }
    }

    /// Raw text up to the terminating `;`, parsed as a DVR expression.
    fn dvr_expr(&mut self) -> Result<DvrExpr, SyntaxError> {
        self.skip();
        let start = self.pos;
        let len = self.rest().find(';').ok_or_else(|| self.error("missing ';'"))?;
        let text = &self.src[start..start + len];
        let e = parse_expr(text).map_err(|e| self.error_at(start, e.to_string()))?;
        self.pos = start + len;
        Ok(e)
    }

    fn window(&mut self) -> Result<(i64, i64), SyntaxError> {
        self.keyword("window")?;
        let lo = self.int()?;
        let at = self.pos;
        let hi = self.int()?;
        if hi < lo {
            return Err(self.error_at(at, "window end precedes its start"));
        }
        Ok((lo, hi))
    }

    fn ring(&mut self) -> Result<RingDecl, SyntaxError> {
        let at = self.pos;
        let field = match self.word()?.as_str() {
            "ZZ" => return Ok(RingDecl::Integers),
            "QQ" => FieldDecl::Rationals,
            "Fp" => {
                self.expect('(')?;
                let p = self.u64()?;
                self.expect(')')?;
                FieldDecl::Prime(p)
            }
            other => return Err(self.error_at(at, format!("unknown coefficient ring '{other}'"))),
        };
        self.expect('[')?;
        let mut vars = vec![self.name()?];
        while self.eat(',') {
            vars.push(self.name()?);
        }
        self.expect(']')?;
        let order = if self.peek().is_some_and(|c| c.is_ascii_alphabetic()) { self.word()? } else { "grevlex".to_string() };
        let relations = if self.eat('/') { self.element_list()? } else { Vec::new() };
        Ok(RingDecl::Poly { field, vars, order, relations })
    }

    fn complex(&mut self) -> Result<ComplexDef, SyntaxError> {
        if self.try_keyword("koszul") {
            return Ok(ComplexDef::Koszul(self.element_list()?));
        }
        self.expect('{')?;
        let mut diffs = Vec::new();
        if self.eat('}') {
            return Ok(ComplexDef::Diffs(diffs));
        }
        loop {
            let i = self.int()?;
            self.expect(':')?;
            diffs.push((i, self.matrix()?));
            if self.eat('}') {
                return Ok(ComplexDef::Diffs(diffs));
            }
            self.expect(',')?;
        }
    }

    fn optional_uint(&mut self, key: &str) -> Result<Option<usize>, SyntaxError> {
        if self.try_keyword(key) {
            Ok(Some(self.uint()?))
        } else {
            Ok(None)
        }
    }

    fn command(&mut self, head: &str, at: usize) -> Result<Command, SyntaxError> {
        Ok(match head {
            "supp" => Command::Supp { x: self.name()? },
            "supp-member" => Command::SuppMember { prime: self.ideal_ref()?, x: self.name()? },
            "cosupp-member" => {
                Command::CosuppMember { prime: self.ideal_ref()?, x: self.name()?, bound: self.optional_uint("bound")? }
            }
            "cosupp" => Command::Cosupp { x: self.name()? },
            "homology" => Command::Homology { x: self.name()? },
            "resolve" => Command::Resolve { x: self.name()?, length: self.optional_uint("length")? },
            "tor" | "ext" => {
                let m = self.name()?;
                let n = self.name()?;
                let (lo, hi) = self.window()?;
                if head == "tor" {
                    Command::Tor { m, n, lo, hi }
                } else {
                    Command::Ext { m, n, lo, hi }
                }
            }
            "local-cohomology" => {
                let a = self.ideal_ref()?;
                let x = self.name()?;
                self.keyword("at")?;
                let at = self.ideal_ref()?;
                let (lo, hi) = self.window()?;
                Command::LocalCohomology { a, x, at, lo, hi }
            }
            "adic" => Command::Adic { x: self.name()?, a: self.ideal_ref()?, bound: self.optional_uint("bound")? },
            "filtration" => Command::Filtration { x: self.name()? },
            "bass" => {
                let prime = self.ideal_ref()?;
                let x = self.name()?;
                self.keyword("window")?;
                let lo = self.uint()?;
                let hi = self.uint()?;
                Command::Bass { prime, x, lo, hi }
            }
            "dvr-eval" => Command::DvrEval { expr: self.dvr_expr()? },
            "dvr-supp" => Command::DvrSupp { expr: self.dvr_expr()? },
            "dvr-cosupp" => Command::DvrCosupp { expr: self.dvr_expr()? },
            "dvr-adic" => {
                let at = self.pos;
                let ideal = self.word()?;
                if ideal != "0" && ideal != "m" {
                    return Err(self.error_at(at, "DVR ideal must be 0 or m"));
                }
                Command::DvrAdic { ideal, expr: self.dvr_expr()? }
            }
            "verify" => {
                let suite = self.word()?;
                let mut seed = None;
                let mut count = None;
                loop {
                    if self.try_keyword("seed") {
                        seed = Some(self.u64()?);
                    } else if self.try_keyword("count") {
                        count = Some(self.uint()?);
                    } else {
                        break;
                    }
                }
                Command::Verify { suite, seed, count }
            }
            other => return Err(self.error_at(at, format!("unknown statement '{other}'"))),
        })
    }

    fn statement(&mut self) -> Result<Statement, SyntaxError> {
        self.skip();
        let at = self.pos;
        let head = self.word()?;
        let s = match head.as_str() {
            "ring" => Statement::Ring(self.ring()?),
            "ambient" => {
                let at = self.pos;
                match self.word()?.as_str() {
                    "complete" => Statement::Ambient { complete: true },
                    "incomplete" => Statement::Ambient { complete: false },
                    _ => return Err(self.error_at(at, "expected complete or incomplete")),
                }
            }
            "ideal" => {
                let name = self.name()?;
                self.expect('=')?;
                Statement::Ideal { name, gens: self.element_list()? }
            }
            "module" => {
                let name = self.name()?;
                self.expect('=')?;
                let at = self.pos;
                let def = match self.word()?.as_str() {
                    "coker" => ModuleDef::Coker(self.matrix()?),
                    "free" => ModuleDef::Free(self.uint()?),
                    _ => return Err(self.error_at(at, "expected coker or free")),
                };
                Statement::Module { name, def }
            }
            "complex" => {
                let name = self.name()?;
                self.expect('=')?;
                Statement::Complex { name, def: self.complex()? }
            }
            "dvr" => {
                let name = self.name()?;
                self.expect('=')?;
                Statement::Dvr { name, expr: self.dvr_expr()? }
            }
            _ => Statement::Command(self.command(&head, at)?),
        };
        self.expect(';')?;
        Ok(s)
    }
}

pub fn parse_session(text: &str) -> Result<Document, SyntaxError> {
    let mut c = Cursor { src: text, pos: 0 };
    let mut statements = Vec::new();
    while !c.at_end() {
        statements.push(c.statement()?);
    }
    Ok(Document { statements })
}
