//! Umbral polynomials: polynomials in the formal variables `x`, `y` and in
//! umbral symbols, together with the evaluation functional.
//!
//! Every symbol is created through an [`Alphabet`], which records the umbra it
//! stands for. Two symbols with different ids are uncorrelated under
//! evaluation even when they are bound to the same umbra, so `σ'σ''` and `σ²`
//! evaluate differently. Whoever builds an expression decides which factors
//! share a symbol.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_numbers::{int, Rational};
use crate::polynomial::{BiPoly, Polynomial};
use crate::power_series::Coeff;
use crate::umbra::Umbra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolId(u32);

/// An indeterminate of an umbral polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    Sym(SymbolId),
}

/// A symbol together with the umbra it is bound to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UmbralSymbol {
    pub id: SymbolId,
    pub binding: Umbra,
}

/// Exponent vector; variables with exponent zero are not stored.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(BTreeMap<Var, usize>);

impl Monomial {
    pub fn var(v: Var) -> Self {
        Self(BTreeMap::from([(v, 1)]))
    }

    pub fn exponent(&self, v: Var) -> usize {
        self.0.get(&v).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, usize)> + '_ {
        self.0.iter().map(|(&v, &e)| (v, e))
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (&v, &e) in &other.0 {
            *out.entry(v).or_insert(0) += e;
        }
        Monomial(out)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UmbralPolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl UmbralPolynomial {
    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::default(), c);
        p
    }

    pub fn var(v: Var) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::var(v), Rational::one());
        p
    }

    pub fn x() -> Self {
        Self::var(Var::X)
    }

    pub fn y() -> Self {
        Self::var(Var::Y)
    }

    pub fn symbol(s: &UmbralSymbol) -> Self {
        Self::var(Var::Sym(s.id))
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc * self.clone();
        }
        acc
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * r);
        }
        out
    }

    /// Power-rule derivative in one indeterminate, term by term.
    pub fn formal_derivative(&self, wrt: Var) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(wrt);
            if e == 0 {
                continue;
            }
            let mut reduced = m.0.clone();
            if e == 1 {
                reduced.remove(&wrt);
            } else {
                reduced.insert(wrt, e - 1);
            }
            out.add_term(Monomial(reduced), c * int(e as i64));
        }
        out
    }

    /// Highest exponent of `v` across all terms.
    pub fn degree_in(&self, v: Var) -> usize {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }
}

impl fmt::Debug for UmbralPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UmbralPolynomial({self})")
    }
}

impl fmt::Display for UmbralPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut s = crate::exact_numbers::to_exact_string(c);
                for (v, e) in m.iter() {
                    let name = match v {
                        Var::X => "x".to_string(),
                        Var::Y => "y".to_string(),
                        Var::Sym(SymbolId(i)) => format!("s{i}"),
                    };
                    s.push('*');
                    s.push_str(&name);
                    if e > 1 {
                        s.push_str(&format!("^{e}"));
                    }
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for UmbralPolynomial {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Neg for UmbralPolynomial {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Sub for UmbralPolynomial {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for UmbralPolynomial {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.times(b), ca * cb);
            }
        }
        out
    }
}

impl Zero for UmbralPolynomial {
    fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for UmbralPolynomial {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Coeff for UmbralPolynomial {
    fn scale(&self, r: &Rational) -> Self {
        UmbralPolynomial::scale(self, r)
    }
    fn try_inverse(&self) -> Option<Self> {
        let (m, c) = self.terms.iter().next()?;
        (self.terms.len() == 1 && m.0.is_empty()).then(|| Self::constant(c.recip()))
    }
    fn from_rational(r: Rational) -> Self {
        Self::constant(r)
    }
}

/// Issues fresh symbols and remembers their bindings; evaluation goes
/// through the alphabet that created the symbols.
#[derive(Clone, Debug, Default)]
pub struct Alphabet {
    bindings: Vec<Umbra>,
}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    /// A symbol uncorrelated with every symbol issued before it.
    pub fn fresh(&mut self, binding: Umbra) -> UmbralSymbol {
        let id = SymbolId(self.bindings.len() as u32);
        self.bindings.push(binding.clone());
        UmbralSymbol { id, binding }
    }

    /// Shorthand for a fresh symbol as a polynomial.
    pub fn fresh_poly(&mut self, binding: Umbra) -> UmbralPolynomial {
        UmbralPolynomial::symbol(&self.fresh(binding))
    }

    pub fn binding(&self, id: SymbolId) -> &Umbra {
        &self.bindings[id.0 as usize]
    }

    /// The evaluation functional: each symbol power becomes the matching
    /// moment of its binding, distinct symbols factorize.
    pub fn evaluate(&self, p: &UmbralPolynomial) -> Result<BiPoly> {
        let mut out = BiPoly::zero();
        for (m, c) in p.terms() {
            let mut coeff = c.clone();
            let (mut ex, mut ey) = (0, 0);
            for (v, e) in m.iter() {
                match v {
                    Var::X => ex = e,
                    Var::Y => ey = e,
                    Var::Sym(id) => {
                        let u = self.binding(id);
                        if e > u.order() {
                            return Err(Error::InsufficientOrder {
                                needed: e,
                                available: u.order(),
                            });
                        }
                        coeff *= u.moment(e);
                    }
                }
            }
            out.add_term((ex, ey), coeff);
        }
        Ok(out)
    }

    /// Evaluation when the result involves `x` only.
    pub fn evaluate_x(&self, p: &UmbralPolynomial) -> Result<Polynomial> {
        Ok(self
            .evaluate(p)?
            .as_x_polynomial()
            .expect("expression has no y"))
    }

    /// Evaluation when the result is a number.
    pub fn evaluate_scalar(&self, p: &UmbralPolynomial) -> Result<Rational> {
        Ok(self.evaluate(p)?.coeff(0, 0))
    }

    /// The umbral Abel polynomial `γ(γ + n.u)^(n-1)` with a fresh symbol for
    /// `n.u`; 1 when `n = 0`.
    pub fn abel_polynomial(
        &mut self,
        n: usize,
        gamma: &UmbralPolynomial,
        u: &Umbra,
    ) -> Result<UmbralPolynomial> {
        if n == 0 {
            return Ok(UmbralPolynomial::one());
        }
        if u.order() < n {
            return Err(Error::InsufficientOrder {
                needed: n,
                available: u.order(),
            });
        }
        let dotted = self.fresh_poly(u.dot_scalar(&int(n as i64)));
        Ok(gamma.clone() * (gamma.clone() + dotted).pow(n - 1))
    }
}

/// `E[x (x + n.u)^(n-1)]`, a monic degree-`n` polynomial in `x`.
pub fn abel(n: usize, u: &Umbra) -> Result<Polynomial> {
    let mut alphabet = Alphabet::new();
    let p = alphabet.abel_polynomial(n, &UmbralPolynomial::x(), u)?;
    alphabet.evaluate_x(&p)
}

/// `E[γ (γ + n.u)^(n-1)]` with `γ` a symbol bound to `gamma`.
pub fn abel_umbral(n: usize, gamma: &Umbra, u: &Umbra) -> Result<Rational> {
    let mut alphabet = Alphabet::new();
    let g = alphabet.fresh_poly(gamma.clone());
    let p = alphabet.abel_polynomial(n, &g, u)?;
    alphabet.evaluate_scalar(&p)
}
