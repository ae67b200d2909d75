use thiserror::Error;

/// Failures raised by the series, umbra, array and family operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series must have zero constant term")]
    NonZeroConstant,
    #[error("series must have constant term 1")]
    ConstantNotOne,
    #[error("series is not invertible: {0}")]
    NonInvertible(&'static str),
    #[error("umbra needs moments up to {needed} but only has order {available}")]
    InsufficientOrder { needed: usize, available: usize },
    #[error("riordan arrays have different flavors")]
    FlavorMismatch,
    #[error("operation requires an exponential riordan array")]
    RequiresExponential,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
