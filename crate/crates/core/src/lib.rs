//! Exact umbral calculus over the rationals.
//!
//! Umbrae are represented by their moment sequences. On top of them sit the
//! dot-operations, umbral Abel polynomials, Lagrange inversion, Sheffer
//! sequences, the exponential Riordan group, and explicit formulas for the
//! Chebyshev (second kind), Gegenbauer, Meixner (first kind), Mittag-Leffler
//! and Pidduck polynomials.

#[cfg(feature = "cli")]
pub mod cli;
pub mod error;
pub mod exact_numbers;
pub mod expr;
pub mod families;
pub mod polynomial;
pub mod power_series;
pub mod random;
pub mod sheffer;
pub mod umbra;
pub mod umbral_poly;
pub mod verify;

pub use error::{Error, Result};
pub use exact_numbers::Rational;
pub use polynomial::{BiPoly, Polynomial};
pub use power_series::TruncatedSeries;
pub use umbra::{SpecialUmbraKind, Umbra};
