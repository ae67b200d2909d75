//! Umbrae as exact moment sequences, and the dot-operation algebra on them.
//!
//! An [`Umbra`] of order `N` stores `m_0..=m_N` with `m_0 = 1`; its generating
//! function is `f(z) = sum m_n z^n / n!`. Operations that have both a
//! moment-combinatorial description and a generating-function description
//! expose the moment route as the main entry point and keep the series route
//! available as an independent check.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_numbers::{binomial_int, factorial, int, pow, to_exact_string, Rational};
use crate::power_series::TruncatedSeries;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Umbra {
    moments: Vec<Rational>,
}

/// The named umbrae.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecialUmbraKind {
    /// `1`, moments `1, 0, 0, ...`
    Augmentation,
    /// `1 + z`, moments `1, 1, 0, 0, ...`
    Singleton,
    /// `exp(e^z - 1)`, Bell-number moments
    Bell,
    /// `1 / (1 - z)`, moments `n!`
    UBar,
    /// `e^(a z)`, moments `a^n`
    Scalar(Rational),
}

impl SpecialUmbraKind {
    pub fn umbra(&self, order: usize) -> Umbra {
        match self {
            Self::Augmentation => Umbra::augmentation(order),
            Self::Singleton => Umbra::singleton(order),
            Self::Bell => Umbra::bell(order),
            Self::UBar => Umbra::ubar(order),
            Self::Scalar(a) => Umbra::scalar(a, order),
        }
    }
}

impl Umbra {
    /// Wraps a moment list; `m_0` must be 1.
    pub fn from_moments(moments: Vec<Rational>) -> Result<Self> {
        match moments.first() {
            Some(m0) if m0.is_one() => Ok(Self { moments }),
            _ => Err(Error::ConstantNotOne),
        }
    }

    pub fn augmentation(order: usize) -> Self {
        Self::from_series(&TruncatedSeries::one(order)).expect("constant term 1")
    }

    pub fn singleton(order: usize) -> Self {
        let mut moments = vec![Rational::zero(); order + 1];
        moments[0] = Rational::one();
        if order >= 1 {
            moments[1] = Rational::one();
        }
        Self { moments }
    }

    /// Built from `exp(e^z - 1)` at the requested order.
    pub fn bell(order: usize) -> Self {
        let e_z_minus_one = Self::scalar(&Rational::one(), order)
            .gf()
            .sub(&TruncatedSeries::one(order))
            .expect("same order");
        Self::from_series(&e_z_minus_one.exp().expect("zero constant term")).expect("constant term 1")
    }

    pub fn ubar(order: usize) -> Self {
        Self {
            moments: (0..=order).map(factorial).collect(),
        }
    }

    pub fn scalar(a: &Rational, order: usize) -> Self {
        Self {
            moments: (0..=order).map(|n| pow(a, n)).collect(),
        }
    }

    /// `m_n = n! [z^n] f(z)`.
    pub fn from_series(f: &TruncatedSeries) -> Result<Self> {
        if !f.coeff(0).is_one() {
            return Err(Error::ConstantNotOne);
        }
        Ok(Self {
            moments: f
                .coeffs()
                .iter()
                .enumerate()
                .map(|(n, c)| c * factorial(n))
                .collect(),
        })
    }

    /// The generating function `sum m_n z^n / n!`.
    pub fn gf(&self) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(
            self.moments
                .iter()
                .enumerate()
                .map(|(n, m)| m / factorial(n))
                .collect(),
            self.order(),
        )
    }

    pub fn order(&self) -> usize {
        self.moments.len() - 1
    }

    pub fn moments(&self) -> &[Rational] {
        &self.moments
    }

    pub fn moment(&self, n: usize) -> &Rational {
        &self.moments[n]
    }

    /// Re-truncates, padding with zero moments when growing.
    pub fn with_order(&self, order: usize) -> Self {
        let mut moments = self.moments.clone();
        moments.resize(order + 1, Rational::zero());
        Self { moments }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    /// Sum of two uncorrelated umbrae: the binomial convolution of moments.
    /// Both arguments are treated as distinct symbols even if equal.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let moments = (0..=self.order())
            .map(|n| {
                (0..=n)
                    .map(|k| binomial_int(n, k) * &self.moments[k] * &other.moments[n - k])
                    .sum()
            })
            .collect();
        Ok(Self { moments })
    }

    /// `a.u`, the umbra of `f_u(z)^a`.
    pub fn dot_scalar(&self, a: &Rational) -> Self {
        let f = self.gf().pow(a).expect("gf has constant term 1");
        Self::from_series(&f).expect("constant term 1")
    }

    /// `self.u`, the umbra of `f_self(log f_u(z))`.
    pub fn dot(&self, u: &Self) -> Result<Self> {
        self.check_order(u)?;
        let inner = u.gf().log()?;
        Self::from_series(&self.gf().compose(&inner)?)
    }

    /// The derivative umbra: `m_n = n m_(n-1)`, i.e. gf `1 + z f(z)`.
    pub fn derivative_umbra(&self) -> Self {
        let mut moments = Vec::with_capacity(self.moments.len());
        moments.push(Rational::one());
        for n in 1..=self.order() {
            moments.push(int(n as i64) * &self.moments[n - 1]);
        }
        Self { moments }
    }

    /// `[0.u, 1.u, ..., n.u]`, or `[0.u, -1.u, ..., -n.u]` when `negative`,
    /// each obtained from the previous one by adding an uncorrelated copy.
    pub fn multiples(&self, n: usize, negative: bool) -> Vec<Umbra> {
        let step = if negative {
            self.dot_scalar(&int(-1))
        } else {
            self.clone()
        };
        let mut out = Vec::with_capacity(n + 1);
        out.push(Umbra::augmentation(self.order()));
        for k in 1..=n {
            let next = out[k - 1].add(&step).expect("same order");
            out.push(next);
        }
        out
    }

    /// `self.β.u_∂`, by the binomial-like expansion
    /// `m_n = sum_k C(n,k) m_k(self) m_(n-k)(k.u)`.
    pub fn composition_umbra(&self, u: &Self) -> Result<Self> {
        self.check_order(u)?;
        Ok(self.composition_with(&u.multiples(self.order(), false)))
    }

    /// [`Umbra::composition_umbra`] given the multiples `k.u`.
    pub(crate) fn composition_with(&self, multiples: &[Umbra]) -> Self {
        let n = self.order();
        let moments = (0..=n)
            .map(|m| {
                (0..=m)
                    .map(|k| binomial_int(m, k) * &self.moments[k] * multiples[k].moment(m - k))
                    .sum()
            })
            .collect();
        Self { moments }
    }

    /// Series route for [`Umbra::composition_umbra`]: the umbra of
    /// `f_self(z f_u(z))`.
    pub fn composition_umbra_via_series(&self, u: &Self) -> Result<Self> {
        self.check_order(u)?;
        let inner = u.gf().shift_up();
        Self::from_series(&self.gf().compose(&inner)?)
    }

    /// The compositional inverse umbra: `gf - 1` is the series reversion of
    /// `f_u - 1`. Needs `m_1 != 0`.
    pub fn inverse_umbra(&self) -> Result<Self> {
        if self.order() >= 1 && self.moments[1].is_zero() {
            return Err(Error::NonInvertible("umbra has zero first moment"));
        }
        let one = TruncatedSeries::one(self.order());
        let reverted = self.gf().sub(&one)?.revert()?;
        Self::from_series(&reverted.add(&one)?)
    }

    /// The umbra with moments `E[g (g - n.u)^(n-1)]` for `n >= 1`, and 1 at
    /// `n = 0`. Expanded by uncorrelation of `g` and the dotted copy of `u`.
    pub fn k_umbra(&self, u: &Self) -> Result<Self> {
        self.check_order(u)?;
        Ok(self.k_umbra_with(&u.multiples(self.order(), true)))
    }

    /// [`Umbra::k_umbra`] given the multiples `-k.u`.
    pub(crate) fn k_umbra_with(&self, negative_multiples: &[Umbra]) -> Self {
        let n = self.order();
        let mut moments = Vec::with_capacity(n + 1);
        moments.push(Rational::one());
        for m in 1..=n {
            let neg = &negative_multiples[m];
            let value = (0..m)
                .map(|j| binomial_int(m - 1, j) * &self.moments[j + 1] * neg.moment(m - 1 - j))
                .sum();
            moments.push(value);
        }
        Self { moments }
    }

    /// Series route for [`Umbra::k_umbra`]: the umbra of
    /// `f_self((z f_u(z))^<-1>)`.
    pub fn k_umbra_via_reversion(&self, u: &Self) -> Result<Self> {
        self.check_order(u)?;
        let reverted = u.gf().shift_up().revert()?;
        Self::from_series(&self.gf().compose(&reverted)?)
    }
}

impl fmt::Debug for Umbra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Umbra{self}")
    }
}

impl fmt::Display for Umbra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.moments.iter().map(to_exact_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_numbers::frac;
    use crate::random::UmbraSampler;
    use proptest::prelude::*;

    fn moments(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&m| int(m)).collect()
    }

    fn umbra(v: &[i64]) -> Umbra {
        Umbra::from_moments(moments(v)).unwrap()
    }

    fn series(v: &[i64], n: usize) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(moments(v), n)
    }

    #[test]
    fn multiples_match_dot_scalar() {
        let u = Umbra::from_moments(vec![int(1), int(2), int(-1), int(3), int(0), int(5)]).unwrap();
        for negative in [false, true] {
            for (k, m) in u.multiples(5, negative).iter().enumerate() {
                let a = if negative { -(k as i64) } else { k as i64 };
                assert_eq!(m, &u.dot_scalar(&int(a)));
            }
        }
    }

    #[test]
    fn special_umbrae() {
        assert_eq!(Umbra::augmentation(3).moments(), &moments(&[1, 0, 0, 0])[..]);
        assert_eq!(Umbra::singleton(3).moments(), &moments(&[1, 1, 0, 0])[..]);
        assert_eq!(Umbra::bell(5).moments(), &moments(&[1, 1, 2, 5, 15, 52])[..]);
        assert_eq!(Umbra::ubar(4).moments(), &moments(&[1, 1, 2, 6, 24])[..]);
        assert_eq!(Umbra::scalar(&frac(1, 2), 2).moments(), &[int(1), frac(1, 2), frac(1, 4)][..]);
        // ū = -1.χ.-1
        let ubar = Umbra::singleton(6)
            .dot_scalar(&int(-1))
            .dot(&Umbra::scalar(&int(-1), 6))
            .unwrap();
        assert_eq!(ubar, Umbra::ubar(6));
        assert_eq!(SpecialUmbraKind::Bell.umbra(3), Umbra::bell(3));
    }

    #[test]
    fn from_series_and_gf() {
        assert_eq!(Umbra::from_series(&TruncatedSeries::one(2)).unwrap(), Umbra::augmentation(2));
        assert_eq!(Umbra::from_series(&series(&[1, 1], 3)).unwrap(), Umbra::singleton(3));
        assert_eq!(Umbra::from_series(&series(&[1, 1, 1, 1, 1], 4)).unwrap(), Umbra::ubar(4));
        assert_eq!(Umbra::augmentation(3).gf(), TruncatedSeries::one(3));
        assert_eq!(Umbra::singleton(3).gf(), series(&[1, 1], 3));
        let f = TruncatedSeries::from_coeffs(vec![int(1), frac(2, 3), frac(-1, 5)], 2);
        assert_eq!(Umbra::from_series(&f).unwrap().gf(), f);
        assert_eq!(Umbra::from_series(&series(&[2], 2)), Err(Error::ConstantNotOne));
        assert_eq!(Umbra::from_moments(moments(&[0, 1])), Err(Error::ConstantNotOne));
    }

    #[test]
    fn add_examples() {
        let u = umbra(&[1, 3, -2, 7]);
        assert_eq!(u.add(&Umbra::augmentation(3)).unwrap(), u);
        let chi = Umbra::singleton(3);
        assert_eq!(chi.add(&chi).unwrap().moments(), &moments(&[1, 2, 2, 0])[..]);
        let ubar = Umbra::ubar(5);
        let sum = ubar.add(&ubar).unwrap();
        assert_eq!(sum.moments(), &(0..=5).map(|n| factorial(n + 1)).collect::<Vec<_>>()[..]);
        assert_eq!(sum.gf(), ubar.gf().mul(&ubar.gf()).unwrap());
        assert!(matches!(u.add(&Umbra::augmentation(2)), Err(Error::OrderMismatch { .. })));
    }

    #[test]
    fn dot_scalar_examples() {
        let u = umbra(&[1, 2, -1, 4]);
        assert_eq!(u.dot_scalar(&int(0)), Umbra::augmentation(3));
        assert_eq!(Umbra::ubar(3).dot_scalar(&int(-1)).moments(), &moments(&[1, -1, 0, 0])[..]);
        let chi = Umbra::singleton(4);
        assert_eq!(chi.dot_scalar(&int(2)), chi.add(&chi).unwrap());
        let three = u.add(&u).unwrap().add(&u).unwrap();
        assert_eq!(u.dot_scalar(&int(3)), three);
    }

    #[test]
    fn dot_examples() {
        let chi = Umbra::singleton(6);
        let beta = Umbra::bell(6);
        let one = Umbra::scalar(&int(1), 6);
        assert_eq!(chi.dot(&beta).unwrap(), one);
        assert_eq!(beta.dot(&chi).unwrap(), one);
        let g = umbra(&[1, 2, -3, 5]);
        let a = frac(-2, 3);
        let expected: Vec<_> = (0..=3).map(|n| pow(&a, n) * g.moment(n)).collect();
        assert_eq!(g.dot(&Umbra::scalar(&a, 3)).unwrap().moments(), &expected[..]);
        assert_eq!(g.dot(&Umbra::scalar(&int(1), 3)).unwrap(), g);
    }

    #[test]
    fn derivative_umbra_examples() {
        assert_eq!(Umbra::augmentation(4).derivative_umbra(), Umbra::singleton(4));
        let d = Umbra::ubar(3).derivative_umbra();
        assert_eq!(d.moments(), &moments(&[1, 1, 2, 6])[..]);
        let oracle = TruncatedSeries::one(3)
            .add(&series(&[1, 1, 1, 1], 3).shift_up())
            .unwrap();
        assert_eq!(d.gf(), oracle);
        assert_eq!(Umbra::singleton(3).derivative_umbra().moments(), &moments(&[1, 1, 2, 0])[..]);
    }

    #[test]
    fn composition_umbra_examples() {
        let g = umbra(&[1, -1, 3, 2, 0]);
        let eps = Umbra::augmentation(4);
        assert_eq!(g.composition_umbra(&eps).unwrap(), g);
        let lah = Umbra::scalar(&int(1), 3).composition_umbra(&Umbra::ubar(3)).unwrap();
        assert_eq!(lah.moments(), &moments(&[1, 1, 3, 13])[..]);
        assert_eq!(lah, Umbra::scalar(&int(1), 3).composition_umbra_via_series(&Umbra::ubar(3)).unwrap());
        assert_eq!(eps.composition_umbra(&g).unwrap(), eps);
    }

    #[test]
    fn inverse_umbra_examples() {
        assert_eq!(Umbra::singleton(5).inverse_umbra().unwrap(), Umbra::singleton(5));
        let inv = Umbra::scalar(&int(1), 7).inverse_umbra().unwrap();
        // revert(e^z - 1) = log(1 + z)
        let log1p = series(&[1, 1], 7).log().unwrap();
        let expected = log1p.add(&TruncatedSeries::one(7)).unwrap();
        assert_eq!(inv.gf(), expected);
        assert!(matches!(Umbra::augmentation(3).inverse_umbra(), Err(Error::NonInvertible(_))));
    }

    #[test]
    fn k_umbra_examples() {
        let g = umbra(&[1, 4, -1, 0, 2]);
        assert_eq!(g.k_umbra(&Umbra::augmentation(4)).unwrap(), g);
        let chi = Umbra::singleton(4);
        let k = chi.k_umbra(&chi).unwrap();
        assert_eq!(k.moments(), &moments(&[1, 1, -2, 12, -120])[..]);
        assert_eq!(k, chi.k_umbra_via_reversion(&chi).unwrap());
        let eps = Umbra::augmentation(4);
        assert_eq!(eps.k_umbra(&g).unwrap(), eps);
    }

    #[test]
    fn cancellation_of_dotted_copies() {
        let u = umbra(&[1, 2, 5, -1, 3]);
        for k in [1, 2, 5] {
            let s = u.dot_scalar(&int(k)).add(&u.dot_scalar(&int(-k))).unwrap();
            assert_eq!(s, Umbra::augmentation(4));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn composition_routes_agree(seed in any::<u64>()) {
            let mut sampler = UmbraSampler::new(seed);
            let (g, u) = (sampler.umbra(9), sampler.umbra(9));
            prop_assert_eq!(g.composition_umbra(&u).unwrap(), g.composition_umbra_via_series(&u).unwrap());
        }

        #[test]
        fn lagrange_inversion(seed in any::<u64>()) {
            let mut sampler = UmbraSampler::new(seed);
            let (g, u) = (sampler.umbra(10), sampler.umbra(10));
            prop_assert_eq!(g.k_umbra(&u).unwrap(), g.k_umbra_via_reversion(&u).unwrap());
        }

        #[test]
        fn inverse_is_involution(seed in any::<u64>()) {
            let u = UmbraSampler::new(seed).invertible_umbra(8);
            prop_assert_eq!(u.inverse_umbra().unwrap().inverse_umbra().unwrap(), u);
        }

        #[test]
        fn dot_scalar_is_multiplicative(seed in any::<u64>(), a in (-4i64..5, 1i64..4), b in (-4i64..5, 1i64..4)) {
            let u = UmbraSampler::new(seed).umbra(7);
            let (a, b) = (frac(a.0, a.1), frac(b.0, b.1));
            prop_assert_eq!(u.dot_scalar(&b).dot_scalar(&a), u.dot_scalar(&(a * b)));
        }

        #[test]
        fn add_matches_gf_product(seed in any::<u64>()) {
            let mut sampler = UmbraSampler::new(seed);
            let (u, v) = (sampler.umbra(8), sampler.umbra(8));
            let via_series = Umbra::from_series(&u.gf().mul(&v.gf()).unwrap()).unwrap();
            prop_assert_eq!(u.add(&v).unwrap(), via_series);
        }

        #[test]
        fn derivative_inverse_of_negated_k(seed in any::<u64>()) {
            let u = UmbraSampler::new(seed).umbra(9);
            let rhs = u.k_umbra(&u).unwrap().dot_scalar(&int(-1)).derivative_umbra().inverse_umbra().unwrap();
            prop_assert_eq!(u.derivative_umbra(), rhs);
        }
    }
}
