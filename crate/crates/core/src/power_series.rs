//! Truncated formal power series in `z` with exact coefficients.
//!
//! A [`TruncatedSeries`] keeps `c_0..=c_N` for a fixed order `N`. Binary
//! operations refuse series of different orders. The coefficient ring is
//! generic: plain [`Rational`] for generating functions of umbrae, or a
//! polynomial ring when a generating function carries a parameter such as `x`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_numbers::{int, Rational};

/// Coefficient ring of a power series: a commutative ring that is also a
/// vector space over the rationals.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn scale(&self, r: &Rational) -> Self;
    /// Multiplicative inverse, when it exists in the ring.
    fn try_inverse(&self) -> Option<Self>;
    fn from_rational(r: Rational) -> Self;
}

impl Coeff for Rational {
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn try_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries<C = Rational> {
    coeffs: Vec<C>,
}

impl<C: Coeff> TruncatedSeries<C> {
    /// Builds a series of the given order, padding with zeros or dropping
    /// coefficients beyond `z^order`.
    pub fn from_coeffs(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        Self::from_coeffs(vec![c], order)
    }

    /// The series `z`.
    pub fn z(order: usize) -> Self {
        Self::from_coeffs(vec![C::zero(), C::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
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

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c.clone())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map(|c| c.scale(r))
    }

    /// Multiplies every coefficient by a ring element.
    pub fn scale_by(&self, r: &C) -> Self {
        self.map(|c| c.clone() * r.clone())
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn recip(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .try_inverse()
            .ok_or(Error::NonInvertible("constant term is not a unit"))?;
        let n = self.order();
        let mut out: Vec<C> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for m in 1..=n {
            let mut acc = C::zero();
            for k in 1..=m {
                acc = acc + self.coeffs[k].clone() * out[m - k].clone();
            }
            out.push(-(inv0.clone() * acc));
        }
        Ok(Self { coeffs: out })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.recip()?)
    }

    /// `sum_k f^k / k!`, from `n g_n = sum_k k f_k g_(n-k)`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstant);
        }
        let n = self.order();
        let mut out: Vec<C> = Vec::with_capacity(n + 1);
        out.push(C::one());
        for m in 1..=n {
            let mut acc = C::zero();
            for k in 1..=m {
                acc = acc + self.coeffs[k].scale(&int(k as i64)) * out[m - k].clone();
            }
            out.push(acc.scale(&(Rational::one() / int(m as i64))));
        }
        Ok(Self { coeffs: out })
    }

    /// Logarithm of a series with constant term 1, from `f g' = f'`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantNotOne);
        }
        let n = self.order();
        let mut out: Vec<C> = vec![C::zero(); n + 1];
        for m in 1..=n {
            // m g_m = m f_m - sum_{k=1}^{m-1} k g_k f_(m-k)
            let mut acc = self.coeffs[m].scale(&int(m as i64));
            for k in 1..m {
                acc = acc - out[k].scale(&int(k as i64)) * self.coeffs[m - k].clone();
            }
            out[m] = acc.scale(&(Rational::one() / int(m as i64)));
        }
        Ok(Self { coeffs: out })
    }

    /// `f^a` for a series with constant term 1, by the recurrence
    /// `n g_n = sum_k (a k - (n - k)) f_k g_(n-k)` that follows from
    /// `f g' = a f' g`.
    pub fn pow(&self, a: &Rational) -> Result<Self> {
        self.pow_by(&C::from_rational(a.clone()))
    }

    /// `f^a` where the exponent lives in the coefficient ring.
    pub fn pow_by(&self, a: &C) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantNotOne);
        }
        let n = self.order();
        let mut out: Vec<C> = Vec::with_capacity(n + 1);
        out.push(C::one());
        for m in 1..=n {
            let mut acc = C::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let weight = a.scale(&int(k as i64)) - C::from_rational(int((m - k) as i64));
                acc = acc + weight * self.coeffs[k].clone() * out[m - k].clone();
            }
            out.push(acc.scale(&(Rational::one() / int(m as i64))));
        }
        Ok(Self { coeffs: out })
    }

    /// Non-negative integer power by repeated multiplication.
    pub fn powi(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    /// `f(g(z))`; the inner series must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstant);
        }
        let n = self.order();
        let mut acc = Self::zero(n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] = acc.coeffs[0].clone() + c.clone();
        }
        Ok(acc)
    }

    /// Compositional inverse `g` with `f(g(z)) = z`, by Newton iteration
    /// `g <- g - (f(g) - z) / f'(g)`. Each step doubles the number of correct
    /// coefficients, so it runs at doubling truncation orders.
    pub fn revert(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonInvertible("constant term is not zero"));
        }
        let n = self.order();
        if n == 0 {
            return Ok(Self::zero(0));
        }
        let inv1 = self.coeffs[1]
            .try_inverse()
            .ok_or(Error::NonInvertible("linear coefficient is not a unit"))?;
        let df = self.derivative();
        // correct modulo z^2
        let mut g = Self::z(n.min(1)).scale_by(&inv1);
        let mut correct = 2;
        while correct <= n {
            let m = (2 * correct - 1).min(n);
            let g_m = g.with_order(m);
            let residue = self.with_order(m).compose(&g_m)?.sub(&Self::z(m))?;
            let slope = df.with_order(m).compose(&g_m)?;
            g = g_m.sub(&residue.div(&slope)?)?;
            correct *= 2;
        }
        Ok(g.with_order(n))
    }

    /// Formal derivative, keeping the order (the top coefficient becomes 0).
    pub fn derivative(&self) -> Self {
        let n = self.order();
        let coeffs = (1..=n)
            .map(|k| self.coeffs[k].scale(&int(k as i64)))
            .collect();
        Self::from_coeffs(coeffs, n)
    }

    /// Multiplies by `z`, dropping the coefficient that falls off the end.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(C::zero());
        coeffs.extend(self.coeffs[..self.order()].iter().cloned());
        Self { coeffs }
    }

    /// Re-truncates to a different order, padding with zeros when growing.
    pub fn with_order(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), order)
    }
}

impl<C: Coeff> fmt::Debug for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncatedSeries")
            .field("order", &self.order())
            .field("coeffs", &self.coeffs)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_numbers::{binomial, factorial, frac};
    use proptest::prelude::*;

    fn s(cs: &[Rational], n: usize) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(cs.to_vec(), n)
    }

    fn si(cs: &[i64], n: usize) -> TruncatedSeries {
        s(&cs.iter().map(|&c| int(c)).collect::<Vec<_>>(), n)
    }

    fn exp_z(n: usize) -> TruncatedSeries {
        s(&(0..=n).map(|k| Rational::one() / factorial(k)).collect::<Vec<_>>(), n)
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(si(&[1, 1], 3).mul(&si(&[1, 1], 3)).unwrap(), si(&[1, 2, 1, 0], 3));
        let f = si(&[3, -1, 4], 3);
        assert_eq!(f.mul(&TruncatedSeries::one(3)).unwrap(), f);
        assert_eq!(si(&[1, -1], 3).mul(&si(&[1, 1, 1, 1], 3)).unwrap(), TruncatedSeries::one(3));
        assert_eq!(
            si(&[1], 3).mul(&si(&[1], 4)),
            Err(Error::OrderMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn exp_examples() {
        assert_eq!(TruncatedSeries::<Rational>::z(3).exp().unwrap(), exp_z(3));
        assert_eq!(TruncatedSeries::<Rational>::zero(3).exp().unwrap(), TruncatedSeries::one(3));
        assert_eq!(si(&[1, 1], 3).exp(), Err(Error::NonZeroConstant));

        // Bell numbers from exp(e^z - 1), against the expanded double sum
        // sum_k (e^z - 1)^k / k!.
        let n = 4;
        let inner = exp_z(n).sub(&TruncatedSeries::one(n)).unwrap();
        let bell = inner.exp().unwrap();
        let mut oracle = TruncatedSeries::zero(n);
        for k in 0..=n {
            oracle = oracle.add(&inner.powi(k).scale(&(Rational::one() / factorial(k)))).unwrap();
        }
        assert_eq!(bell, oracle);
        let moments: Vec<_> = (0..=n).map(|k| bell.coeff(k) * factorial(k)).collect();
        assert_eq!(moments, [1, 1, 2, 5, 15].map(int));
    }

    #[test]
    fn log_examples() {
        assert_eq!(
            si(&[1, 1], 3).log().unwrap(),
            s(&[int(0), int(1), frac(-1, 2), frac(1, 3)], 3)
        );
        let g = si(&[0, 1, 1], 5);
        assert_eq!(g.exp().unwrap().log().unwrap(), g);
        assert_eq!(TruncatedSeries::<Rational>::one(4).log().unwrap(), TruncatedSeries::zero(4));
        assert_eq!(si(&[2, 1], 3).log(), Err(Error::ConstantNotOne));
    }

    #[test]
    fn pow_examples() {
        assert_eq!(si(&[1, 1], 3).pow(&int(-1)).unwrap(), si(&[1, -1, 1, -1], 3));
        assert_eq!(si(&[1, 5, 2], 3).pow(&int(0)).unwrap(), TruncatedSeries::one(3));
        let oracle: Vec<_> = (0..=2)
            .map(|k| binomial(&frac(-1, 2), k) * if k % 2 == 0 { int(1) } else { int(-1) })
            .collect();
        assert_eq!(oracle, vec![int(1), frac(1, 2), frac(3, 8)]);
        assert_eq!(si(&[1, -1], 2).pow(&frac(-1, 2)).unwrap(), s(&oracle, 2));
        assert_eq!(si(&[0, 1], 2).pow(&int(2)), Err(Error::ConstantNotOne));
    }

    #[test]
    fn compose_examples() {
        let f = si(&[2, 3, -1, 7], 3);
        assert_eq!(f.compose(&TruncatedSeries::z(3)).unwrap(), f);

        // 1/(1-w) at w = e^z - 1, against sum_k (e^z-1)^k
        let n = 3;
        let inner = exp_z(n).sub(&TruncatedSeries::one(n)).unwrap();
        let geometric = si(&[1, 1, 1, 1], n);
        let mut oracle = TruncatedSeries::zero(n);
        for k in 0..=n {
            oracle = oracle.add(&inner.powi(k)).unwrap();
        }
        let got = geometric.compose(&inner).unwrap();
        assert_eq!(got, oracle);
        assert_eq!(got, s(&[int(1), int(1), frac(3, 2), frac(13, 6)], 3));

        let log1p = si(&[1, 1], 5).log().unwrap();
        assert_eq!(exp_z(5).compose(&log1p).unwrap(), si(&[1, 1], 5));
        assert_eq!(f.compose(&si(&[1, 1], 3)), Err(Error::NonZeroConstant));
    }

    // g <- z + g^2 iterated to a fixed point, independent of `revert`.
    fn catalan_fixed_point(n: usize) -> TruncatedSeries {
        let z = TruncatedSeries::z(n);
        let mut g = TruncatedSeries::zero(n);
        for _ in 0..=n {
            g = z.add(&g.mul(&g).unwrap()).unwrap();
        }
        g
    }

    #[test]
    fn revert_examples() {
        assert_eq!(TruncatedSeries::<Rational>::z(4).revert().unwrap(), TruncatedSeries::z(4));
        let f = si(&[0, 1, -1], 4);
        let g = f.revert().unwrap();
        assert_eq!(g, catalan_fixed_point(4));
        assert_eq!(g, si(&[0, 1, 1, 2, 5], 4));
        assert_eq!(f.compose(&g).unwrap(), TruncatedSeries::z(4));
        let h = si(&[0, 1, 1], 4).revert().unwrap();
        assert_eq!(h, si(&[0, 1, -1, 2, -5], 4));
        assert_eq!(si(&[0, 1, 1], 4).compose(&h).unwrap(), TruncatedSeries::z(4));
        assert!(matches!(si(&[1, 1], 4).revert(), Err(Error::NonInvertible(_))));
        assert!(matches!(si(&[0, 0, 1], 4).revert(), Err(Error::NonInvertible(_))));
    }

    fn series_strategy(n: usize, c0: i64) -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec((-5i64..6, 1i64..4), n).prop_map(move |v| {
            let mut cs = vec![int(c0)];
            cs.extend(v.into_iter().map(|(p, q)| frac(p, q)));
            TruncatedSeries::from_coeffs(cs, n)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn exp_log_inverse(f in series_strategy(7, 1), g in series_strategy(7, 0)) {
            prop_assert_eq!(f.log().unwrap().exp().unwrap(), f);
            prop_assert_eq!(g.exp().unwrap().log().unwrap(), g);
        }

        #[test]
        fn revert_both_sides(f in series_strategy(7, 0), lead in 1i64..4) {
            let mut f = f;
            f.coeffs[1] = int(lead);
            let g = f.revert().unwrap();
            let z = TruncatedSeries::z(7);
            prop_assert_eq!(f.compose(&g).unwrap(), z.clone());
            prop_assert_eq!(g.compose(&f).unwrap(), z);
        }

        #[test]
        fn pow_adds_exponents(f in series_strategy(6, 1), a in (-6i64..6, 1i64..4), b in (-6i64..6, 1i64..4)) {
            let (a, b) = (frac(a.0, a.1), frac(b.0, b.1));
            let lhs = f.pow(&a).unwrap().mul(&f.pow(&b).unwrap()).unwrap();
            prop_assert_eq!(lhs, f.pow(&(a + b)).unwrap());
        }

        #[test]
        fn pow_matches_exp_of_scaled_log(f in series_strategy(6, 1), a in (-6i64..6, 1i64..4)) {
            let a = frac(a.0, a.1);
            prop_assert_eq!(f.pow(&a).unwrap(), f.log().unwrap().scale(&a).exp().unwrap());
            if a.is_integer() && a >= Rational::zero() {
                let k = a.to_integer().try_into().unwrap();
                prop_assert_eq!(f.pow(&a).unwrap(), f.powi(k));
            }
        }

        #[test]
        fn multiply_commutes_and_associates(
            f in series_strategy(6, 2), g in series_strategy(6, -1), h in series_strategy(6, 0)
        ) {
            prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
            prop_assert_eq!(
                f.mul(&g).unwrap().mul(&h).unwrap(),
                f.mul(&g.mul(&h).unwrap()).unwrap()
            );
        }
    }
}
