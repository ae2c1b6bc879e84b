use core::fmt;

use crate::Rational;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Domain errors raised by the invariant calculus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A quantity that must be an integer came out fractional.
    NonIntegral(Rational),
    /// Division of a rational by zero.
    DivisionByZero,
    /// No rank-two classification is available for this ambient degree.
    UnsupportedDegree(u32),
    /// The operation is only defined for the listed ranks.
    RankUnsupported { rank: u32, expected: &'static str },
    /// A constructor argument violated a type invariant.
    InvalidArgument(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonIntegral(x) => write!(f, "value {x} is not an integer"),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::UnsupportedDegree(r) => {
                write!(f, "no rank-two ACM classification for degree r = {r}")
            }
            Error::RankUnsupported { rank, expected } => {
                write!(f, "rank {rank} is not supported here (expected {expected})")
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
