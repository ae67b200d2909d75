//! Exact polynomials over [`Rational`]: dense univariate [`Polynomial`] in `x`
//! and sparse bivariate [`BiPoly`] in `x` and `y`.
//!
//! Both implement [`Coeff`], so they can serve as coefficients of a
//! truncated power series in `z`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exact_numbers::{factorial, int, to_exact_string, Rational};
use crate::power_series::Coeff;

/// Dense polynomial in `x`, coefficients lowest degree first, with no
/// trailing zeros (the zero polynomial has no coefficients).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `c x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `C(x, k) = x (x-1) ... (x-k+1) / k!` as a degree-`k` polynomial.
    pub fn binomial_basis(k: usize) -> Self {
        let mut p = Self::one();
        for i in 0..k {
            p = p * Self::new(vec![int(-(i as i64)), Rational::one()]);
        }
        p.scale(&(Rational::one() / factorial(k)))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * r).collect())
    }

    /// `p(a x)`.
    pub fn scale_var(&self, a: &Rational) -> Self {
        let mut pw = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pw);
            pw *= a;
        }
        Self::new(out)
    }

    /// Substitutes a coefficient-ring value for `x` by Horner's rule.
    pub fn substitute<C: Coeff>(&self, value: &C) -> C {
        self.coeffs.iter().rev().fold(C::zero(), |acc, c| {
            acc * value.clone() + C::from_rational(c.clone())
        })
    }

    /// `p(q(x))`.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        self.substitute(inner)
    }

    /// Coordinates in the binomial basis `C(x, k)`, obtained from forward
    /// differences at 0.
    pub fn to_binomial_basis(&self) -> Vec<Rational> {
        let Some(d) = self.degree() else {
            return Vec::new();
        };
        let mut values: Vec<Rational> = (0..=d).map(|i| self.eval(&int(i as i64))).collect();
        let mut out = Vec::with_capacity(d + 1);
        for _ in 0..=d {
            out.push(values[0].clone());
            values = values.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        out
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (c, monomial_name("x", i))),
        )
    }
}

fn monomial_name(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        k => format!("{var}^{k}"),
    }
}

fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Rational, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, mono) in terms {
        let negative = c < &Rational::zero();
        let mag = if negative { -c.clone() } else { c.clone() };
        if first {
            if negative {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if negative { '-' } else { '+' })?;
        }
        first = false;
        if mono.is_empty() {
            write!(f, "{}", to_exact_string(&mag))?;
        } else if mag.is_one() {
            write!(f, "{mono}")?;
        } else if mag.denom().is_one() {
            write!(f, "{}{mono}", to_exact_string(&mag))?;
        } else {
            write!(f, "({}){mono}", to_exact_string(&mag))?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (a, b) in long.iter_mut().zip(short) {
            *a += b;
        }
        Polynomial::new(long)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        self + (-rhs)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Coeff for Polynomial {
    fn scale(&self, r: &Rational) -> Self {
        Polynomial::scale(self, r)
    }
    fn try_inverse(&self) -> Option<Self> {
        match self.degree() {
            Some(0) => Some(Self::constant(Rational::one() / &self.coeffs[0])),
            _ => None,
        }
    }
    fn from_rational(r: Rational) -> Self {
        Self::constant(r)
    }
}

impl From<Rational> for Polynomial {
    fn from(r: Rational) -> Self {
        Self::constant(r)
    }
}

/// Sparse polynomial in two commuting variables `x` and `y`, keyed by the
/// exponent pair `(i, j)` of `x^i y^j`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), Rational>,
}

impl BiPoly {
    pub fn x() -> Self {
        Self::from_x(&Polynomial::x())
    }

    pub fn y() -> Self {
        Self::from_y(&Polynomial::x())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term((0, 0), c);
        p
    }

    /// Embeds a polynomial in `x`.
    pub fn from_x(p: &Polynomial) -> Self {
        let mut out = Self::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term((i, 0), c.clone());
        }
        out
    }

    /// Embeds a polynomial, renaming its variable to `y`.
    pub fn from_y(p: &Polynomial) -> Self {
        let mut out = Self::zero();
        for (j, c) in p.coeffs().iter().enumerate() {
            out.add_term((0, j), c.clone());
        }
        out
    }

    pub fn add_term(&mut self, exps: (usize, usize), c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Projects onto `x` when no `y` appears.
    pub fn as_x_polynomial(&self) -> Option<Polynomial> {
        let deg = self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (&(i, j), c) in &self.terms {
            if j != 0 {
                return None;
            }
            coeffs[i] = c.clone();
        }
        Some(Polynomial::new(coeffs))
    }

    /// Projects onto `y` (renamed `x` in the result) when no `x` appears.
    pub fn as_y_polynomial(&self) -> Option<Polynomial> {
        self.swap().as_x_polynomial()
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = Self::zero();
        for (&e, c) in &self.terms {
            out.add_term(e, c * r);
        }
        out
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms.iter().rev().map(|(&(i, j), c)| {
                let mono = [monomial_name("x", i), monomial_name("y", j)]
                    .into_iter()
                    .filter(|s| !s.is_empty())
                    .collect::<Vec<_>>()
                    .join("*");
                (c, mono)
            }),
        )
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(mut self, rhs: BiPoly) -> BiPoly {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        self + (-rhs)
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term((i + k, j + l), a * b);
            }
        }
        out
    }
}

impl Zero for BiPoly {
    fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for BiPoly {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Coeff for BiPoly {
    fn scale(&self, r: &Rational) -> Self {
        BiPoly::scale(self, r)
    }
    fn try_inverse(&self) -> Option<Self> {
        match (self.terms.len(), self.terms.get(&(0, 0))) {
            (1, Some(c)) => Some(Self::constant(Rational::one() / c)),
            _ => None,
        }
    }
    fn from_rational(r: Rational) -> Self {
        Self::constant(r)
    }
}
