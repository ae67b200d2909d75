//! Sheffer sequences of an umbra pair `(γ, α)`, exponential and ordinary
//! Riordan arrays, and the group structure they share.
//!
//! `γ` carries `A(z) = f_γ(z)` and `α` carries `B(z) = f_α(z)`, both with
//! constant term 1. The Sheffer sequence has exponential generating function
//! `A(z) exp(x z B(z))` and the exponential Riordan array holds its
//! coefficients. Arrays keep their defining pair so every group operation can
//! be checked on the matrix side and on the umbra side.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_numbers::{binomial_int, factorial, int, Rational};
use crate::polynomial::Polynomial;
use crate::power_series::TruncatedSeries;
use crate::umbra::Umbra;
use crate::umbral_poly::{Alphabet, UmbralPolynomial};

/// The pair `(γ, α)` of umbrae with a common order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UmbraPair {
    gamma: Umbra,
    alpha: Umbra,
}

impl UmbraPair {
    pub fn new(gamma: Umbra, alpha: Umbra) -> Result<Self> {
        if gamma.order() != alpha.order() {
            return Err(Error::OrderMismatch {
                left: gamma.order(),
                right: alpha.order(),
            });
        }
        Ok(Self { gamma, alpha })
    }

    /// `(ε, ε)`, the pair of `(x^n)`.
    pub fn identity(order: usize) -> Self {
        Self {
            gamma: Umbra::augmentation(order),
            alpha: Umbra::augmentation(order),
        }
    }

    pub fn gamma(&self) -> &Umbra {
        &self.gamma
    }

    pub fn alpha(&self) -> &Umbra {
        &self.alpha
    }

    pub fn order(&self) -> usize {
        self.gamma.order()
    }

    /// `(γ, α)(η, δ) = (γ + η.β.α_∂, α + δ.β.α_∂)`.
    pub fn compose(&self, other: &UmbraPair) -> Result<UmbraPair> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        let multiples = self.alpha.multiples(self.order(), false);
        let gamma = self.gamma.add(&other.gamma.composition_with(&multiples))?;
        let alpha = self.alpha.add(&other.alpha.composition_with(&multiples))?;
        UmbraPair::new(gamma, alpha)
    }

    /// `(-1.K_(γ,α), -1.K_α)`.
    pub fn inverse(&self) -> Result<UmbraPair> {
        let minus_one = int(-1);
        let negative = self.alpha.multiples(self.order(), true);
        let gamma = self.gamma.k_umbra_with(&negative).dot_scalar(&minus_one);
        let alpha = self.alpha.k_umbra_with(&negative).dot_scalar(&minus_one);
        UmbraPair::new(gamma, alpha)
    }

    /// `s_(n,k) = C(n,k) E[(γ + k.α)^(n-k)]`, as an `(N+1) x (N+1)` lower
    /// triangular matrix.
    pub fn coefficient_matrix(&self) -> Vec<Vec<Rational>> {
        let n = self.order();
        let mut entries = vec![vec![Rational::zero(); n + 1]; n + 1];
        for (k, multiple) in self.alpha.multiples(n, false).iter().enumerate() {
            let shifted = self.gamma.add(multiple).expect("same order");
            for (row, entries_row) in entries.iter_mut().enumerate().skip(k) {
                entries_row[k] = binomial_int(row, k) * shifted.moment(row - k);
            }
        }
        entries
    }

    /// `s_(n,k) = n! [z^n] A(z) (z B(z))^k / k!` by series arithmetic alone.
    pub fn coefficient_matrix_via_gf(&self) -> Vec<Vec<Rational>> {
        let n = self.order();
        let a = self.gamma.gf();
        let zb = self.alpha.gf().shift_up();
        let mut column = a;
        let mut entries = vec![vec![Rational::zero(); n + 1]; n + 1];
        for k in 0..=n {
            if k > 0 {
                column = column.mul(&zb).expect("same order");
            }
            for (row, entries_row) in entries.iter_mut().enumerate() {
                entries_row[k] = column.coeff(row) * factorial(row) / factorial(k);
            }
        }
        entries
    }
}

/// Polynomials `s_0(x), ..., s_N(x)` of a pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShefferSequence {
    pub pair: UmbraPair,
    pub polys: Vec<Polynomial>,
}

impl ShefferSequence {
    pub fn get(&self, n: usize) -> &Polynomial {
        &self.polys[n]
    }
}

/// `s_n(x) = sum_k C(n,k) E[(γ + k.α)^(n-k)] x^k`.
pub fn sheffer_sequence(pair: &UmbraPair) -> ShefferSequence {
    let matrix = pair.coefficient_matrix();
    let polys = matrix
        .into_iter()
        .enumerate()
        .map(|(n, mut row)| {
            row.truncate(n + 1);
            Polynomial::new(row)
        })
        .collect();
    ShefferSequence {
        pair: pair.clone(),
        polys,
    }
}

/// `s_n(x) = n! [z^n] A(z) exp(x z B(z))`, expanded with polynomial
/// coefficients.
pub fn sheffer_sequence_via_gf(pair: &UmbraPair) -> Vec<Polynomial> {
    let lift = |s: &TruncatedSeries| s.map(|c| Polynomial::constant(c.clone()));
    let a = lift(&pair.gamma.gf());
    let xzb = lift(&pair.alpha.gf().shift_up()).scale_by(&Polynomial::x());
    let egf = a.mul(&xzb.exp().expect("zero constant term")).expect("same order");
    egf.coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| c.scale(&factorial(n)))
        .collect()
}

/// `s_n(x) = E[(x + K)(x + K + n.K_α)^(n-1)]` with `K = K_(γ,α)`.
pub fn abel_representation(pair: &UmbraPair) -> Result<ShefferSequence> {
    let k_gamma = pair.gamma.k_umbra(&pair.alpha)?;
    let k_alpha = pair.alpha.k_umbra(&pair.alpha)?;
    let mut polys = Vec::with_capacity(pair.order() + 1);
    for n in 0..=pair.order() {
        let mut alphabet = Alphabet::new();
        let shifted = UmbralPolynomial::x() + alphabet.fresh_poly(k_gamma.clone());
        let p = alphabet.abel_polynomial(n, &shifted, &k_alpha)?;
        polys.push(alphabet.evaluate_x(&p)?);
    }
    Ok(ShefferSequence {
        pair: pair.clone(),
        polys,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Exponential,
    Ordinary,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Exponential => "exponential",
            Flavor::Ordinary => "ordinary",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Lower-triangular `(N+1) x (N+1)` array of a pair. The ordinary flavor is
/// the exponential one rescaled by `k!/n!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiordanArray {
    pair: UmbraPair,
    flavor: Flavor,
    entries: Vec<Vec<Rational>>,
}

/// Plain square matrix product.
pub fn matrix_product(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let mut out = vec![vec![Rational::zero(); n]; n];
    for (i, out_row) in out.iter_mut().enumerate() {
        for (j, slot) in out_row.iter_mut().enumerate() {
            *slot = (0..n).map(|k| &a[i][k] * &b[k][j]).sum();
        }
    }
    out
}

pub fn identity_matrix(size: usize) -> Vec<Vec<Rational>> {
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

impl RiordanArray {
    pub fn new(pair: &UmbraPair, flavor: Flavor) -> Self {
        let exponential = RiordanArray {
            pair: pair.clone(),
            flavor: Flavor::Exponential,
            entries: pair.coefficient_matrix(),
        };
        match flavor {
            Flavor::Exponential => exponential,
            Flavor::Ordinary => exponential.convert(),
        }
    }

    pub fn pair(&self) -> &UmbraPair {
        &self.pair
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn entries(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    pub fn order(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entry(&self, n: usize, k: usize) -> &Rational {
        &self.entries[n][k]
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.flavor != other.flavor {
            return Err(Error::FlavorMismatch);
        }
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    /// Matrix product; the result carries the composed pair.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(Self {
            pair: self.pair.compose(&other.pair)?,
            flavor: self.flavor,
            entries: matrix_product(&self.entries, &other.entries),
        })
    }

    /// The array of the inverse pair; both flavors have unit diagonal.
    pub fn inverse(&self) -> Result<Self> {
        Ok(Self::new(&self.pair.inverse()?, self.flavor))
    }

    /// Matrix-vector product with the moment vector of `seq`.
    pub fn apply(&self, seq: &Umbra) -> Result<Umbra> {
        if self.flavor != Flavor::Exponential {
            return Err(Error::RequiresExponential);
        }
        if seq.order() != self.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: seq.order(),
            });
        }
        let moments = self
            .entries
            .iter()
            .map(|row| row.iter().zip(seq.moments()).map(|(s, a)| s * a).sum())
            .collect();
        Umbra::from_moments(moments)
    }

    /// Switches flavor, scaling entries by `k!/n!` or `n!/k!`.
    pub fn convert(&self) -> Self {
        let (flavor, scale): (Flavor, fn(usize, usize) -> Rational) = match self.flavor {
            Flavor::Exponential => (Flavor::Ordinary, |n, k| factorial(k) / factorial(n)),
            Flavor::Ordinary => (Flavor::Exponential, |n, k| factorial(n) / factorial(k)),
        };
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(n, row)| {
                row.iter()
                    .enumerate()
                    .map(|(k, e)| if e.is_zero() { e.clone() } else { e * scale(n, k) })
                    .collect()
            })
            .collect();
        Self {
            pair: self.pair.clone(),
            flavor,
            entries,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.entries == identity_matrix(self.entries.len())
    }
}

/// Umbral side of the fundamental theorem: `γ + η.β.α_∂`.
pub fn ftra_umbral(pair: &UmbraPair, seq: &Umbra) -> Result<Umbra> {
    pair.gamma.add(&seq.composition_umbra(&pair.alpha)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::UmbraSampler;
    use proptest::prelude::*;

    fn pascal(order: usize) -> UmbraPair {
        UmbraPair::new(Umbra::scalar(&int(1), order), Umbra::augmentation(order)).unwrap()
    }

    fn poly(cs: &[i64]) -> Polynomial {
        Polynomial::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn sheffer_examples() {
        let id = sheffer_sequence(&UmbraPair::identity(6));
        for n in 0..=6 {
            assert_eq!(id.get(n), &Polynomial::monomial(int(1), n));
        }
        let appell = UmbraPair::new(Umbra::ubar(4), Umbra::augmentation(4)).unwrap();
        assert_eq!(sheffer_sequence(&appell).get(2), &poly(&[2, 2, 1]));
        let binom = UmbraPair::new(Umbra::augmentation(4), Umbra::singleton(4)).unwrap();
        assert_eq!(sheffer_sequence(&binom).get(2), &poly(&[0, 2, 1]));
        assert_eq!(sheffer_sequence_via_gf(&binom)[2], poly(&[0, 2, 1]));
        assert!(sheffer_sequence(&binom).polys.iter().all(Polynomial::is_monic));
    }

    #[test]
    fn pair_requires_equal_orders() {
        assert!(matches!(
            UmbraPair::new(Umbra::ubar(3), Umbra::ubar(4)),
            Err(Error::OrderMismatch { .. })
        ));
    }

    #[test]
    fn abel_representation_special_cases() {
        let id = abel_representation(&UmbraPair::identity(5)).unwrap();
        assert_eq!(id.polys, sheffer_sequence(&UmbraPair::identity(5)).polys);

        let mut sampler = UmbraSampler::new(3);
        let gamma = sampler.umbra(6);
        let appell = UmbraPair::new(gamma.clone(), Umbra::augmentation(6)).unwrap();
        let rep = abel_representation(&appell).unwrap();
        for n in 0..=6 {
            let mut a = Alphabet::new();
            let g = a.fresh_poly(gamma.clone());
            let direct = a.evaluate_x(&(UmbralPolynomial::x() + g).pow(n)).unwrap();
            assert_eq!(rep.get(n), &direct);
        }
    }

    #[test]
    fn riordan_examples() {
        let p = RiordanArray::new(&pascal(6), Flavor::Exponential);
        for n in 0..=6 {
            for k in 0..=6 {
                assert_eq!(p.entry(n, k), &binomial_int(n, k));
            }
        }
        assert_eq!(p.entries(), &pascal(6).coefficient_matrix_via_gf()[..]);
        assert!(RiordanArray::new(&UmbraPair::identity(5), Flavor::Exponential).is_identity());
        let ord = RiordanArray::new(&pascal(5), Flavor::Ordinary);
        for n in 0..=5 {
            for k in 0..=n {
                assert_eq!(ord.entry(n, k), &(Rational::one() / factorial(n - k)));
            }
        }
    }

    #[test]
    fn multiply_examples() {
        let p = RiordanArray::new(&pascal(6), Flavor::Exponential);
        let id = RiordanArray::new(&UmbraPair::identity(6), Flavor::Exponential);
        assert_eq!(p.multiply(&id).unwrap().entries(), p.entries());
        let sq = p.multiply(&p).unwrap();
        for n in 0..=6 {
            for k in 0..=n {
                assert_eq!(sq.entry(n, k), &(binomial_int(n, k) * crate::exact_numbers::pow(&int(2), n - k)));
            }
        }
        assert_eq!(RiordanArray::new(sq.pair(), Flavor::Exponential).entries(), sq.entries());
        let ord = p.convert();
        assert_eq!(p.multiply(&ord), Err(Error::FlavorMismatch));
    }

    #[test]
    fn inverse_examples() {
        let id = RiordanArray::new(&UmbraPair::identity(5), Flavor::Exponential);
        assert!(id.inverse().unwrap().is_identity());
        let p = RiordanArray::new(&pascal(8), Flavor::Exponential);
        let inv = p.inverse().unwrap();
        for n in 0..=8 {
            for k in 0..=n {
                let sign = if (n - k) % 2 == 0 { int(1) } else { int(-1) };
                assert_eq!(inv.entry(n, k), &(sign * binomial_int(n, k)));
            }
        }
        assert!(p.multiply(&inv).unwrap().is_identity());
    }

    #[test]
    fn ftra_examples() {
        let id = RiordanArray::new(&UmbraPair::identity(5), Flavor::Exponential);
        let seq = UmbraSampler::new(9).umbra(5);
        assert_eq!(id.apply(&seq).unwrap(), seq);
        let p = RiordanArray::new(&pascal(6), Flavor::Exponential);
        let ones = Umbra::scalar(&int(1), 6);
        assert_eq!(p.apply(&ones).unwrap(), Umbra::scalar(&int(2), 6));
        let bell = Umbra::bell(6);
        assert_eq!(p.apply(&bell).unwrap(), ftra_umbral(p.pair(), &bell).unwrap());
        assert_eq!(p.convert().apply(&bell), Err(Error::RequiresExponential));
    }

    #[test]
    fn convert_examples() {
        let id = RiordanArray::new(&UmbraPair::identity(4), Flavor::Exponential);
        assert!(id.convert().is_identity());
        let p = RiordanArray::new(&pascal(4), Flavor::Exponential);
        assert_eq!(p.convert().convert(), p);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn routes_agree_on_random_pairs(seed in any::<u64>()) {
            let mut s = UmbraSampler::new(seed);
            let pair = UmbraPair::new(s.umbra(7), s.umbra(7)).unwrap();
            prop_assert_eq!(pair.coefficient_matrix(), pair.coefficient_matrix_via_gf());
            let seq = sheffer_sequence(&pair);
            prop_assert_eq!(&seq.polys, &sheffer_sequence_via_gf(&pair));
            prop_assert_eq!(&seq.polys, &abel_representation(&pair).unwrap().polys);
        }

        #[test]
        fn group_laws(seed in any::<u64>()) {
            let mut s = UmbraSampler::new(seed);
            let mut pair = || UmbraPair::new(s.umbra(6), s.umbra(6)).unwrap();
            let (p, q, r) = (pair(), pair(), pair());
            let arr = |p: &UmbraPair| RiordanArray::new(p, Flavor::Exponential);
            let (ap, aq, ar) = (arr(&p), arr(&q), arr(&r));
            let pq = ap.multiply(&aq).unwrap();
            let predicted = arr(pq.pair());
            prop_assert_eq!(predicted.entries(), pq.entries());
            let left = pq.multiply(&ar).unwrap();
            let right = ap.multiply(&aq.multiply(&ar).unwrap()).unwrap();
            prop_assert_eq!(left.entries(), right.entries());
            let inv = ap.inverse().unwrap();
            prop_assert!(inv.multiply(&ap).unwrap().is_identity());
            prop_assert!(ap.multiply(&inv).unwrap().is_identity());
            let back = inv.inverse().unwrap();
            prop_assert_eq!(back.entries(), ap.entries());
            prop_assert_eq!(p.compose(&UmbraPair::identity(6)).unwrap(), p.clone());
            prop_assert_eq!(UmbraPair::identity(6).compose(&p).unwrap(), p.clone());
            let conv = ap.convert().multiply(&aq.convert()).unwrap();
            let pq_conv = pq.convert();
            prop_assert_eq!(conv.entries(), pq_conv.entries());
        }
    }
}
