//! Exact rational scalars and the binomial-type coefficient helpers used
//! throughout the crate.
//!
//! [`Rational`] is an always-reduced arbitrary precision fraction. Every
//! coefficient, moment and matrix entry in this crate is one.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

/// Arbitrary-precision exact fraction with positive denominator, kept reduced.
pub type Rational = BigRational;

/// Builds the rational `n`.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds the rational `p/q`. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `top (top-1) ... (top-k+1)`, the empty product being 1.
pub fn falling_factorial(top: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut t = top.clone();
    for _ in 0..k {
        acc *= &t;
        t -= Rational::one();
    }
    acc
}

/// `n!` as an exact rational.
pub fn factorial(n: usize) -> Rational {
    Rational::from_integer((1..=n).map(BigInt::from).product())
}

/// Generalized binomial coefficient `C(top, k) = top^(k falling) / k!` for any
/// rational `top`.
pub fn binomial(top: &Rational, k: usize) -> Rational {
    falling_factorial(top, k) / factorial(k)
}

/// Binomial coefficient with integer arguments, zero when `k > n`.
pub fn binomial_int(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    Rational::from_integer(num_integer::binomial(BigInt::from(n), BigInt::from(k)))
}

/// `a^k` for non-negative integer `k`.
pub fn pow(a: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k {
        acc *= a;
    }
    acc
}

/// Serializes as `"p/q"`, or `"p"` when the denominator is 1.
pub fn to_exact_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"`, `"p/q"` or `"-p/q"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::Parse {
        position: 0,
        message: format!("invalid rational literal `{s}`"),
    };
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use proptest::prelude::*;

    // Plain product of `k` consecutive descending terms, written without
    // reusing `falling_factorial`.
    fn product_oracle(top: &Rational, k: usize) -> Rational {
        (0..k).fold(Rational::one(), |acc, i| acc * (top - int(i as i64)))
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(&int(5), 2), int(10));
        assert_eq!(binomial(&int(-1), 3), int(-1));
        assert_eq!(product_oracle(&int(-1), 3) / int(6), int(-1));
        assert_eq!(binomial(&frac(1, 2), 2), frac(-1, 8));
        assert_eq!(binomial(&frac(7, 3), 0), int(1));
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(&int(4), 4), int(24));
        assert_eq!(falling_factorial(&frac(-9, 4), 0), int(1));
        assert_eq!(falling_factorial(&int(-2), 3), int(-24));
        assert_eq!(product_oracle(&int(-2), 3), int(-24));
    }

    #[test]
    fn binomial_int_outside_range_is_zero() {
        assert_eq!(binomial_int(3, 5), int(0));
        assert_eq!(binomial_int(12, 6), int(924));
    }

    #[test]
    fn exact_string_round_trip() {
        for s in ["0", "1", "-3", "22/7", "-1/8"] {
            assert_eq!(to_exact_string(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(to_exact_string(&parse_rational("4/-6").unwrap()), "-2/3");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-40i64..40, 1i64..12).prop_map(|(p, q)| frac(p, q))
    }

    proptest! {
        #[test]
        fn binomial_times_factorial_is_falling(top in small_rational(), k in 0usize..10) {
            prop_assert_eq!(binomial(&top, k) * factorial(k), falling_factorial(&top, k));
            prop_assert_eq!(falling_factorial(&top, k), product_oracle(&top, k));
        }

        #[test]
        fn binomial_symmetry(n in 0usize..30, k in 0usize..30) {
            prop_assume!(k <= n);
            prop_assert_eq!(binomial(&int(n as i64), k), binomial(&int(n as i64), n - k));
        }

        #[test]
        fn pascal_recurrence(n in -20i64..20, k in 1usize..12) {
            let lhs = binomial(&int(n), k);
            let rhs = binomial(&int(n - 1), k) + binomial(&int(n - 1), k - 1);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn reduced_after_arithmetic(a in small_rational(), b in small_rational()) {
            use num_integer::Integer;
            let s = &a + &b;
            prop_assert!(s.denom().is_positive());
            prop_assert!(s.numer().gcd(s.denom()).is_one());
        }
    }
}
