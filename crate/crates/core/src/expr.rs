//! A small prefix-function language for naming umbrae.
//!
//! ```text
//! expr   := atom | name "(" expr ("," expr)* ")" | "[" rational ("," rational)* "]"
//! atom   := eps | chi | bell | ubar
//! name   := scalar | egf | add | dot | dotscalar | deriv | inv | k | comp
//! ```
//!
//! `[m0, m1, ...]` lists moments and `egf(c0, c1, ...)` lists generating
//! function coefficients; both are padded with zeros up to the requested order.
//! `scalar(a)` and the first argument of `dotscalar(a, u)` are rational
//! literals such as `-3` or `5/2`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact_numbers::{parse_rational, to_exact_string, Rational};
use crate::power_series::TruncatedSeries;
use crate::umbra::Umbra;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UmbraExpr {
    Eps,
    Chi,
    Bell,
    Ubar,
    Scalar(Rational),
    Moments(Vec<Rational>),
    Egf(Vec<Rational>),
    Add(Box<UmbraExpr>, Box<UmbraExpr>),
    Dot(Box<UmbraExpr>, Box<UmbraExpr>),
    DotScalar(Rational, Box<UmbraExpr>),
    Deriv(Box<UmbraExpr>),
    Inv(Box<UmbraExpr>),
    K(Box<UmbraExpr>, Box<UmbraExpr>),
    Comp(Box<UmbraExpr>, Box<UmbraExpr>),
}

/// An evaluation failure together with the sub-expression that raised it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalError {
    pub expr: String,
    pub error: Error,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "in `{}`: {}", self.expr, self.error)
    }
}

impl std::error::Error for EvalError {}

impl UmbraExpr {
    pub fn eval(&self, order: usize) -> std::result::Result<Umbra, EvalError> {
        use UmbraExpr::*;
        let value = match self {
            Eps => Ok(Umbra::augmentation(order)),
            Chi => Ok(Umbra::singleton(order)),
            Bell => Ok(Umbra::bell(order)),
            Ubar => Ok(Umbra::ubar(order)),
            Scalar(a) => Ok(Umbra::scalar(a, order)),
            Moments(ms) => Umbra::from_moments(padded(ms, order)),
            Egf(cs) => Umbra::from_series(&TruncatedSeries::from_coeffs(cs.clone(), order)),
            Add(a, b) => a.eval(order)?.add(&b.eval(order)?),
            Dot(a, b) => a.eval(order)?.dot(&b.eval(order)?),
            DotScalar(c, u) => Ok(u.eval(order)?.dot_scalar(c)),
            Deriv(u) => Ok(u.eval(order)?.derivative_umbra()),
            Inv(u) => u.eval(order)?.inverse_umbra(),
            K(g, u) => g.eval(order)?.k_umbra(&u.eval(order)?),
            Comp(g, u) => g.eval(order)?.composition_umbra(&u.eval(order)?),
        };
        value.map_err(|error| EvalError {
            expr: self.to_string(),
            error,
        })
    }
}

fn padded(values: &[Rational], order: usize) -> Vec<Rational> {
    let mut out = values.to_vec();
    out.resize(order + 1, Rational::from_integer(0.into()));
    out
}

fn join(values: &[Rational]) -> String {
    values.iter().map(to_exact_string).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for UmbraExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use UmbraExpr::*;
        match self {
            Eps => write!(f, "eps"),
            Chi => write!(f, "chi"),
            Bell => write!(f, "bell"),
            Ubar => write!(f, "ubar"),
            Scalar(a) => write!(f, "scalar({})", to_exact_string(a)),
            Moments(ms) => write!(f, "[{}]", join(ms)),
            Egf(cs) => write!(f, "egf({})", join(cs)),
            Add(a, b) => write!(f, "add({a}, {b})"),
            Dot(a, b) => write!(f, "dot({a}, {b})"),
            DotScalar(c, u) => write!(f, "dotscalar({}, {u})", to_exact_string(c)),
            Deriv(u) => write!(f, "deriv({u})"),
            Inv(u) => write!(f, "inv({u})"),
            K(g, u) => write!(f, "k({g}, {u})"),
            Comp(g, u) => write!(f, "comp({g}, {u})"),
        }
    }
}

impl FromStr for UmbraExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parser = Parser { src: s, pos: 0 };
        let expr = parser.expr()?;
        parser.skip_ws();
        if parser.pos < s.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(expr)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn peek(&mut self, c: char) -> bool {
        self.skip_ws();
        self.rest().starts_with(c)
    }

    fn ident(&mut self) -> Result<&str> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(self.rest().len());
        if len == 0 || !self.rest().starts_with(|c: char| c.is_ascii_alphabetic()) {
            return Err(self.error("expected a name"));
        }
        let start = self.pos;
        self.pos += len;
        Ok(&self.src[start..self.pos])
    }

    fn rational(&mut self) -> Result<Rational> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_digit() || c == '-' || c == '/'))
            .unwrap_or(self.rest().len());
        let text = &self.rest()[..len];
        let value = parse_rational(text).map_err(|_| self.error(format!("expected a rational, found `{text}`")))?;
        self.pos += len;
        Ok(value)
    }

    fn rational_list(&mut self, close: char) -> Result<Vec<Rational>> {
        let mut values = vec![self.rational()?];
        while self.peek(',') {
            self.eat(',')?;
            values.push(self.rational()?);
        }
        self.eat(close)?;
        Ok(values)
    }

    fn expr(&mut self) -> Result<UmbraExpr> {
        use UmbraExpr::*;
        if self.peek('[') {
            self.eat('[')?;
            return Ok(Moments(self.rational_list(']')?));
        }
        let start = self.pos;
        let name = self.ident()?.to_owned();
        let atom = match name.as_str() {
            "eps" => Some(Eps),
            "chi" => Some(Chi),
            "bell" => Some(Bell),
            "ubar" => Some(Ubar),
            _ => None,
        };
        if let Some(atom) = atom {
            return Ok(atom);
        }
        const FUNCTIONS: [&str; 9] = ["scalar", "egf", "add", "dot", "k", "comp", "dotscalar", "deriv", "inv"];
        if !FUNCTIONS.contains(&name.as_str()) {
            return Err(Error::Parse {
                position: start,
                message: format!("unknown name `{name}`"),
            });
        }
        self.eat('(')?;
        let boxed = |p: &mut Self| p.expr().map(Box::new);
        let two = |p: &mut Self| -> Result<(Box<UmbraExpr>, Box<UmbraExpr>)> {
            let a = boxed(p)?;
            p.eat(',')?;
            let b = boxed(p)?;
            p.eat(')')?;
            Ok((a, b))
        };
        let expr = match name.as_str() {
            "scalar" => {
                let a = self.rational()?;
                self.eat(')')?;
                Scalar(a)
            }
            "egf" => Egf(self.rational_list(')')?),
            "add" => two(self).map(|(a, b)| Add(a, b))?,
            "dot" => two(self).map(|(a, b)| Dot(a, b))?,
            "k" => two(self).map(|(a, b)| K(a, b))?,
            "comp" => two(self).map(|(a, b)| Comp(a, b))?,
            "dotscalar" => {
                let c = self.rational()?;
                self.eat(',')?;
                let u = boxed(self)?;
                self.eat(')')?;
                DotScalar(c, u)
            }
            "deriv" => {
                let u = boxed(self)?;
                self.eat(')')?;
                Deriv(u)
            }
            "inv" => {
                let u = boxed(self)?;
                self.eat(')')?;
                Inv(u)
            }
            _ => unreachable!("checked against FUNCTIONS"),
        };
        Ok(expr)
    }
}
