//! A small expression language over DVR objects:
//! `0`, `R`, `Q`, `E`, `T(n)`, `shift(n, X)`, `sum(X, ...)`, `tensor(X, Y)`, `rhom(X, Y)`,
//! `gamma(a, X)`, `lambda(a, X)` with `a` one of `0` or `m`, and named objects.

use std::collections::BTreeMap;
use std::fmt;

use super::{gamma, lambda, rhom, tensor, DvrIdeal, DvrObject, Kind};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DvrExpr {
    Zero,
    Basis(Kind),
    Name(String),
    Shift(i64, Box<DvrExpr>),
    Sum(Vec<DvrExpr>),
    Tensor(Box<DvrExpr>, Box<DvrExpr>),
    Rhom(Box<DvrExpr>, Box<DvrExpr>),
    Gamma(DvrIdeal, Box<DvrExpr>),
    Lambda(DvrIdeal, Box<DvrExpr>),
}

fn ideal_name(a: DvrIdeal) -> &'static str {
    match a {
        DvrIdeal::Zero => "0",
        DvrIdeal::Max => "m",
    }
}

impl fmt::Display for DvrExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DvrExpr::Zero => write!(f, "0"),
            DvrExpr::Basis(k) => write!(f, "{k}"),
            DvrExpr::Name(n) => write!(f, "{n}"),
            DvrExpr::Shift(n, x) => write!(f, "shift({n}, {x})"),
            DvrExpr::Sum(xs) => {
                let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
                write!(f, "sum({})", parts.join(", "))
            }
            DvrExpr::Tensor(a, b) => write!(f, "tensor({a}, {b})"),
            DvrExpr::Rhom(a, b) => write!(f, "rhom({a}, {b})"),
            DvrExpr::Gamma(i, x) => write!(f, "gamma({}, {x})", ideal_name(*i)),
            DvrExpr::Lambda(i, x) => write!(f, "lambda({}, {x})", ideal_name(*i)),
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, what: &str) -> Error {
        Error::Malformed(format!("{what} at offset {} in DVR expression", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn word(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a name"));
        }
        Ok(String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.s.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.err("expected an integer"))
    }

    fn ideal(&mut self) -> Result<DvrIdeal> {
        match self.word()?.as_str() {
            "0" => Ok(DvrIdeal::Zero),
            "m" => Ok(DvrIdeal::Max),
            _ => Err(self.err("expected ideal 0 or m")),
        }
    }

    fn expr(&mut self) -> Result<DvrExpr> {
        if matches!(self.peek(), Some(b'-') | Some(b'0'..=b'9')) {
            let n = self.int()?;
            return if n == 0 { Ok(DvrExpr::Zero) } else { Err(self.err("only 0 is a numeric object")) };
        }
        let w = self.word()?;
        let call = self.peek() == Some(b'(');
        Ok(match (w.as_str(), call) {
            ("R", false) => DvrExpr::Basis(Kind::R),
            ("Q", false) => DvrExpr::Basis(Kind::Q),
            ("E", false) => DvrExpr::Basis(Kind::E),
            ("T", true) => {
                self.eat(b'(')?;
                let n = self.int()?;
                self.eat(b')')?;
                if n < 1 || n > u32::MAX as i64 {
                    return Err(self.err("T(n) needs n >= 1"));
                }
                DvrExpr::Basis(Kind::T(n as u32))
            }
            ("shift", true) => {
                self.eat(b'(')?;
                let n = self.int()?;
                self.eat(b',')?;
                let x = self.expr()?;
                self.eat(b')')?;
                DvrExpr::Shift(n, Box::new(x))
            }
            ("sum", true) => {
                self.eat(b'(')?;
                let mut xs = vec![self.expr()?];
                while self.peek() == Some(b',') {
                    self.eat(b',')?;
                    xs.push(self.expr()?);
                }
                self.eat(b')')?;
                DvrExpr::Sum(xs)
            }
            ("tensor", true) | ("rhom", true) => {
                self.eat(b'(')?;
                let a = self.expr()?;
                self.eat(b',')?;
                let b = self.expr()?;
                self.eat(b')')?;
                if w == "tensor" {
                    DvrExpr::Tensor(Box::new(a), Box::new(b))
                } else {
                    DvrExpr::Rhom(Box::new(a), Box::new(b))
                }
            }
            ("gamma", true) | ("lambda", true) => {
                self.eat(b'(')?;
                let i = self.ideal()?;
                self.eat(b',')?;
                let x = self.expr()?;
                self.eat(b')')?;
                if w == "gamma" {
                    DvrExpr::Gamma(i, Box::new(x))
                } else {
                    DvrExpr::Lambda(i, Box::new(x))
                }
            }
            (_, false) if w.chars().next().is_some_and(|c| c.is_ascii_alphabetic()) => DvrExpr::Name(w),
            _ => return Err(self.err(&format!("unknown DVR operation '{w}'"))),
        })
    }
}

pub fn parse_expr(text: &str) -> Result<DvrExpr> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// Evaluates over a DVR that is complete or not; names resolve through `env`.
pub fn eval(e: &DvrExpr, complete: bool, env: &BTreeMap<String, DvrObject>) -> Result<DvrObject> {
    let ev = |x: &DvrExpr| eval(x, complete, env);
    match e {
        DvrExpr::Zero => Ok(DvrObject::zero(complete)),
        DvrExpr::Basis(k) => DvrObject::basis(*k, complete),
        DvrExpr::Name(n) => {
            let o = env.get(n).ok_or_else(|| Error::Malformed(format!("unknown DVR object '{n}'")))?;
            if o.is_complete() != complete {
                return Err(Error::AmbientMismatch {
                    left: super::ambient_name(complete),
                    right: super::ambient_name(o.is_complete()),
                });
            }
            Ok(o.clone())
        }
        DvrExpr::Shift(n, x) => Ok(ev(x)?.shift(*n)),
        DvrExpr::Sum(xs) => xs.iter().try_fold(DvrObject::zero(complete), |acc, x| acc.sum(&ev(x)?)),
        DvrExpr::Tensor(a, b) => tensor(&ev(a)?, &ev(b)?),
        DvrExpr::Rhom(a, b) => rhom(&ev(a)?, &ev(b)?),
        DvrExpr::Gamma(i, x) => gamma(&ev(x)?, *i),
        DvrExpr::Lambda(i, x) => lambda(&ev(x)?, *i),
    }
}

impl std::str::FromStr for DvrObject {
    type Err = Error;

    /// Parses over a complete DVR; use [`eval`] for other ambients.
    fn from_str(s: &str) -> Result<Self> {
        eval(&parse_expr(s)?, true, &BTreeMap::new())
    }
}
