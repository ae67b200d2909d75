//! Seeded generation of small random umbrae and polynomials for the
//! verification suites. The same seed always yields the same sequence.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact_numbers::{int, Rational};
use crate::polynomial::Polynomial;
use crate::umbra::Umbra;

/// Moments are drawn uniformly from `-MOMENT_BOUND..=MOMENT_BOUND`.
pub const MOMENT_BOUND: i64 = 3;

pub struct UmbraSampler {
    rng: ChaCha8Rng,
}

impl UmbraSampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn small(&mut self) -> Rational {
        int(self.rng.gen_range(-MOMENT_BOUND..=MOMENT_BOUND))
    }

    /// `m_0 = 1`, the rest small integers.
    pub fn umbra(&mut self, order: usize) -> Umbra {
        let mut moments = vec![int(1)];
        moments.extend((0..order).map(|_| self.small()));
        Umbra::from_moments(moments).expect("m_0 = 1")
    }

    /// Like [`UmbraSampler::umbra`] but with a nonzero first moment.
    pub fn invertible_umbra(&mut self, order: usize) -> Umbra {
        let mut u = self.umbra(order);
        while order >= 1 && u.moment(1) == &int(0) {
            u = self.umbra(order);
        }
        u
    }

    /// Polynomial of exact degree `degree` with small integer coefficients.
    pub fn polynomial(&mut self, degree: usize) -> Polynomial {
        let mut coeffs: Vec<Rational> = (0..degree).map(|_| self.small()).collect();
        let mut lead = self.small();
        while lead == int(0) {
            lead = self.small();
        }
        coeffs.push(lead);
        Polynomial::new(coeffs)
    }

    pub fn below(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        let a: Vec<_> = (0..3).map(|_| UmbraSampler::new(7).umbra(6)).collect();
        assert!(a.windows(2).all(|w| w[0] == w[1]));
        let mut s = UmbraSampler::new(7);
        assert_ne!(s.umbra(6), s.umbra(6));
    }

    #[test]
    fn invertible_has_nonzero_first_moment() {
        let mut s = UmbraSampler::new(1);
        for _ in 0..50 {
            assert_ne!(s.invertible_umbra(4).moment(1), &int(0));
        }
        assert_eq!(s.polynomial(4).degree(), Some(4));
    }
}
