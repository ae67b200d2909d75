//! The master polynomial `P_n(x, y; q, t)` and the classical families it
//! specializes to.
//!
//! `P_n` has exponential generating function
//! `(1 - z)^(-t) (1 + X z / (1 - z)^q)^y` and the explicit form
//!
//! ```text
//! P_n = n! sum_k C(n - k + t + k q - 1, n - k) C(y, k) X^k
//! ```
//!
//! where the slot `X` is a polynomial in `x` and `y` is either a rational or
//! an indeterminate. Each family is computed from the explicit form and can
//! be checked against an expansion of its own generating function.
//!
//! The generating function is treated as the definition of each family, so
//! Gegenbauer uses the slot `X = 2 - 2x` (as for Chebyshev) and Meixner uses
//! powers of `(c - 1)/c`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_numbers::{binomial, factorial, int, pow, Rational};
use crate::polynomial::{BiPoly, Polynomial};
use crate::power_series::TruncatedSeries;
use crate::sheffer::UmbraPair;
use crate::umbra::Umbra;

/// The `y` argument of the master polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum YParam {
    Value(Rational),
    /// `C(y, k)` expands to the degree-`k` polynomial in `y`.
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MasterParams {
    /// Substituted for the first slot, e.g. `2 - 2x`.
    pub xval: Polynomial,
    pub y: YParam,
    pub q: Rational,
    pub t: Rational,
}

impl MasterParams {
    fn binomial_y(&self, k: usize) -> BiPoly {
        match &self.y {
            YParam::Value(y) => BiPoly::constant(binomial(y, k)),
            YParam::Indeterminate => BiPoly::from_y(&Polynomial::binomial_basis(k)),
        }
    }

    fn y_as_bipoly(&self) -> BiPoly {
        match &self.y {
            YParam::Value(y) => BiPoly::constant(y.clone()),
            YParam::Indeterminate => BiPoly::y(),
        }
    }
}

/// `n! sum_k C(n-k+t+kq-1, n-k) C(y,k) X^k`, a polynomial in `x` and `y`.
pub fn master_polynomial(n: usize, p: &MasterParams) -> BiPoly {
    let slot = BiPoly::from_x(&p.xval);
    let mut slot_pow = BiPoly::one();
    let mut sum = BiPoly::zero();
    for k in 0..=n {
        let top = int((n - k) as i64) + &p.t + int(k as i64) * &p.q - Rational::one();
        let c = binomial(&top, n - k);
        sum = sum + (p.binomial_y(k) * slot_pow.clone()).scale(&c);
        slot_pow = slot_pow * slot.clone();
    }
    sum.scale(&factorial(n))
}

/// `n! [z^n] (1 - z)^(-t) (1 + X z (1 - z)^(-q))^y`, expanded as a series
/// with polynomial coefficients.
pub fn master_gf_oracle(n: usize, p: &MasterParams) -> BiPoly {
    let lift = |s: &TruncatedSeries| s.map(|c| BiPoly::constant(c.clone()));
    let one_minus_z = TruncatedSeries::from_coeffs(vec![int(1), int(-1)], n);
    let prefactor = lift(&one_minus_z.pow(&-p.t.clone()).expect("constant term 1"));
    let z_scaled = lift(&one_minus_z.pow(&-p.q.clone()).expect("constant term 1").shift_up())
        .scale_by(&BiPoly::from_x(&p.xval));
    let inner = TruncatedSeries::one(n).add(&z_scaled).expect("same order");
    let powered = inner.pow_by(&p.y_as_bipoly()).expect("constant term 1");
    let gf = prefactor.mul(&powered).expect("same order");
    gf.coeff(n).scale(&factorial(n))
}

/// The named families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    ChebyshevU,
    Gegenbauer { lambda: Rational },
    Meixner { b: Rational, c: Rational },
    MittagLeffler,
    Pidduck,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::exact_numbers::to_exact_string as s;
        match self {
            Self::ChebyshevU => write!(f, "chebyshev-u"),
            Self::Gegenbauer { lambda } => write!(f, "gegenbauer(lambda={})", s(lambda)),
            Self::Meixner { b, c } => write!(f, "meixner(b={}, c={})", s(b), s(c)),
            Self::MittagLeffler => write!(f, "mittag-leffler"),
            Self::Pidduck => write!(f, "pidduck"),
        }
    }
}

/// `2 - 2x`
fn chebyshev_slot() -> Polynomial {
    Polynomial::new(vec![int(2), int(-2)])
}

impl FamilyKind {
    pub fn validate(&self) -> Result<()> {
        if let Self::Meixner { b, c } = self {
            if c.is_zero() || c.is_one() {
                return Err(Error::InvalidParameter(format!("meixner needs c not in {{0, 1}}, got c = {c}")));
            }
            if b.is_integer() && !b.is_positive() {
                return Err(Error::InvalidParameter(format!(
                    "meixner needs b not in {{0, -1, -2, ...}}, got b = {b}"
                )));
            }
        }
        Ok(())
    }

    /// The master-polynomial arguments `(X, y; q, t)` for this family.
    pub fn master_params(&self) -> MasterParams {
        match self {
            Self::ChebyshevU => MasterParams {
                xval: chebyshev_slot(),
                y: YParam::Value(int(-1)),
                q: int(2),
                t: int(2),
            },
            // same slot 2-2x as Chebyshev, as the generating function requires
            Self::Gegenbauer { lambda } => MasterParams {
                xval: chebyshev_slot(),
                y: YParam::Value(-lambda.clone()),
                q: int(2),
                t: int(2) * lambda,
            },
            Self::Meixner { b, c } => MasterParams {
                xval: Polynomial::constant((c - Rational::one()) / c),
                y: YParam::Indeterminate,
                q: int(1),
                t: b.clone(),
            },
            Self::MittagLeffler => MasterParams {
                xval: Polynomial::constant(int(2)),
                y: YParam::Indeterminate,
                q: int(1),
                t: int(0),
            },
            Self::Pidduck => MasterParams {
                xval: Polynomial::constant(int(2)),
                y: YParam::Indeterminate,
                q: int(1),
                t: int(1),
            },
        }
    }

    /// Chebyshev and Gegenbauer have ordinary generating functions and are
    /// `P_n / n!`; the others are `P_n` itself.
    pub fn ordinary_gf(&self) -> bool {
        matches!(self, Self::ChebyshevU | Self::Gegenbauer { .. })
    }

    /// `n`-th polynomial in `x` from the explicit formula.
    pub fn polynomial(&self, n: usize) -> Result<Polynomial> {
        self.validate()?;
        Ok(self.polynomial_unchecked(n))
    }

    fn polynomial_unchecked(&self, n: usize) -> Polynomial {
        let params = self.master_params();
        let p = master_polynomial(n, &params);
        if self.ordinary_gf() {
            p.as_x_polynomial()
                .expect("y is a number")
                .scale(&(Rational::one() / factorial(n)))
        } else {
            p.as_y_polynomial().expect("slot is constant")
        }
    }

    /// Coordinates in the binomial basis `C(x, k)` as read off the explicit
    /// sum, for the families whose `y` slot is the variable.
    pub fn binomial_basis_coords(&self, n: usize) -> Option<Vec<Rational>> {
        let MasterParams { xval, q, t, y } = self.master_params();
        if y != YParam::Indeterminate {
            return None;
        }
        let slot = xval.coeff(0);
        Some(
            (0..=n)
                .map(|k| {
                    let top = int((n - k) as i64) + &t + int(k as i64) * &q - Rational::one();
                    factorial(n) * binomial(&top, n - k) * pow(&slot, k)
                })
                .collect(),
        )
    }

    /// The family's own generating function, expanded in `z` with
    /// polynomial-in-`x` coefficients, read at `z^n` (times `n!` when the
    /// generating function is exponential).
    pub fn gf_oracle(&self, n: usize) -> Result<Polynomial> {
        self.validate()?;
        Ok(self.gf_oracle_unchecked(n))
    }

    fn gf_oracle_unchecked(&self, n: usize) -> Polynomial {
        let lift = |s: &TruncatedSeries| s.map(|c| Polynomial::constant(c.clone()));
        let rational = |cs: &[Rational]| TruncatedSeries::from_coeffs(cs.to_vec(), n);
        let x = Polynomial::x();
        // 1 - 2xz + z^2
        let quadratic = || {
            TruncatedSeries::from_coeffs(
                vec![Polynomial::one(), x.scale(&int(-2)), Polynomial::one()],
                n,
            )
        };
        // exp(x log(f)) for a rational series f with f(0) = 1
        let x_power = |f: TruncatedSeries| {
            lift(&f.log().expect("constant term 1"))
                .scale_by(&x)
                .exp()
                .expect("zero constant term")
        };
        let one_minus_z = rational(&[int(1), int(-1)]);
        let one_plus_z = rational(&[int(1), int(1)]);
        let series = match self {
            Self::ChebyshevU => quadratic().recip().expect("unit constant term"),
            Self::Gegenbauer { lambda } => quadratic().pow(&-lambda.clone()).expect("constant term 1"),
            Self::Meixner { b, c } => {
                let num = rational(&[int(1), -Rational::one() / c]);
                let ratio = num.div(&one_minus_z).expect("unit constant term");
                let pre = lift(&one_minus_z.pow(&-b.clone()).expect("constant term 1"));
                pre.mul(&x_power(ratio)).expect("same order")
            }
            Self::MittagLeffler => x_power(one_plus_z.div(&one_minus_z).expect("unit")),
            Self::Pidduck => {
                let ml = x_power(one_plus_z.div(&one_minus_z).expect("unit"));
                ml.div(&lift(&one_minus_z)).expect("unit constant term")
            }
        };
        let c = series.coeff(n).clone();
        if self.ordinary_gf() {
            c
        } else {
            c.scale(&factorial(n))
        }
    }

    /// For the Sheffer families, the pair `(γ, α)` and the scale `b0` with
    /// `poly_n(x) = s_n(b0 x)`, where `s_n` is the Sheffer sequence of the pair.
    /// The generating function is `A(z) exp(x L(z))` with `L(z) = b0 z B(z)`
    /// and `B(0) = 1`.
    pub fn sheffer_pair(&self, order: usize) -> Result<Option<(UmbraPair, Rational)>> {
        self.validate()?;
        let n = order + 1;
        let rational = |cs: &[Rational]| TruncatedSeries::from_coeffs(cs.to_vec(), n);
        let one_minus_z = rational(&[int(1), int(-1)]);
        let (a, l) = match self {
            Self::Meixner { b, c } => {
                let num = rational(&[int(1), -Rational::one() / c]);
                let l = num.div(&one_minus_z)?.log()?;
                (one_minus_z.pow(&-b.clone())?, l)
            }
            Self::Pidduck => {
                let l = rational(&[int(1), int(1)]).div(&one_minus_z)?.log()?;
                (one_minus_z.recip()?, l)
            }
            _ => return Ok(None),
        };
        let b0 = l.coeff(1).clone();
        let b_normalized = TruncatedSeries::from_coeffs(
            l.coeffs()[1..].iter().map(|c| c / &b0).collect(),
            order,
        );
        let pair = UmbraPair::new(
            Umbra::from_series(&a.with_order(order))?,
            Umbra::from_series(&b_normalized)?,
        )?;
        Ok(Some((pair, b0)))
    }
}

pub fn chebyshev_u(n: usize) -> Polynomial {
    FamilyKind::ChebyshevU.polynomial_unchecked(n)
}

pub fn gegenbauer(n: usize, lambda: &Rational) -> Polynomial {
    FamilyKind::Gegenbauer { lambda: lambda.clone() }.polynomial_unchecked(n)
}

pub fn meixner1(n: usize, b: &Rational, c: &Rational) -> Result<Polynomial> {
    FamilyKind::Meixner { b: b.clone(), c: c.clone() }.polynomial(n)
}

/// Meixner explicit sum `n! sum_k C(n+b-1, n-k) ((c-1)/c)^k C(x,k)` without
/// the parameter restrictions, for limiting cases such as `(b, c) = (0, -1)`.
pub fn meixner1_explicit(n: usize, b: &Rational, c: &Rational) -> Polynomial {
    let ratio = (c - Rational::one()) / c;
    (0..=n).fold(Polynomial::zero(), |acc, k| {
        let coeff = factorial(n) * binomial(&(int(n as i64) + b - Rational::one()), n - k) * pow(&ratio, k);
        acc + Polynomial::binomial_basis(k).scale(&coeff)
    })
}

pub fn mittag_leffler(n: usize) -> Polynomial {
    FamilyKind::MittagLeffler.polynomial_unchecked(n)
}

pub fn pidduck(n: usize) -> Polynomial {
    FamilyKind::Pidduck.polynomial_unchecked(n)
}

/// `sum_k C(n+k+1, n-k) 2^k (x-1)^k`, the Chebyshev expansion in powers of
/// `x - 1`.
pub fn chebyshev_u_shifted_basis(n: usize) -> Polynomial {
    gegenbauer_shifted_basis(n, &int(1))
}

/// `sum_k C(n+2λ+k-1, n-k) C(λ+k-1, k) 2^k (x-1)^k`.
pub fn gegenbauer_shifted_basis(n: usize, lambda: &Rational) -> Polynomial {
    let x_minus_one = Polynomial::new(vec![int(-1), int(1)]);
    let two_lambda = int(2) * lambda;
    let mut shifted_pow = Polynomial::one();
    let mut sum = Polynomial::zero();
    for k in 0..=n {
        let c = binomial(&(int((n + k) as i64) + &two_lambda - Rational::one()), n - k)
            * binomial(&(lambda + int(k as i64) - Rational::one()), k)
            * pow(&int(2), k);
        sum = sum + shifted_pow.scale(&c);
        shifted_pow = shifted_pow * x_minus_one.clone();
    }
    sum
}

/// `U_n = 2x U_(n-1) - U_(n-2)` with `U_0 = 1`, `U_1 = 2x`.
pub fn chebyshev_u_recurrence(n: usize) -> Polynomial {
    let two_x = Polynomial::x().scale(&int(2));
    let (mut prev, mut cur) = (Polynomial::one(), two_x.clone());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = two_x.clone() * cur.clone() - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `n!/k!` weights relating Pidduck to Mittag-Leffler:
/// `P_n = sum_k (n!/k!) M_k`, from dividing the generating function by `1 - z`.
pub fn pidduck_from_mittag_leffler(n: usize) -> Polynomial {
    (0..=n).fold(Polynomial::zero(), |acc, k| {
        acc + mittag_leffler(k).scale(&(factorial(n) / factorial(k)))
    })
}
