use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact division by a zero rational or quadratic number.
    #[error("division by zero")]
    DivisionByZero,

    /// The series has a pole at every integer argument.
    #[error("argument {0} is an integer: the series diverges there")]
    PoleAtInteger(String),

    /// The exact cotangent table only covers reduced denominators 2, 3, 4, 6.
    #[error("exact mode unavailable for denominator {0}; use the certified numeric path")]
    ExactUnavailable(String),

    /// Polygamma orders start at 1 here (the digamma is out of scope).
    #[error("unsupported polygamma order {0}; only orders >= 1 are evaluated")]
    UnsupportedOrder(u32),

    /// An argument fell outside the function's domain.
    #[error("out of domain: {0}")]
    OutOfDomain(String),

    /// A ball could not be separated from zero at the precision cap.
    #[error("insufficient precision: radius still straddles zero at {bits} bits")]
    InsufficientPrecision { bits: u32 },

    /// Working precision below the supported floor.
    #[error("invalid precision {0} bits; at least 64 bits are required")]
    InvalidPrecision(u32),

    /// A malformed or inconsistent argument (usage-level error).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
