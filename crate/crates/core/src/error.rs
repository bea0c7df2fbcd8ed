use thiserror::Error;

use crate::params::Summand;

pub type Result<T> = std::result::Result<T, Error>;

/// First failing condition found while validating an Arthur parameter.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("summand {0} has t <= 0")]
    NonPositiveT(Summand),
    #[error("summand {0} has R[0]")]
    ZeroSl2(Summand),
    #[error("parameter is not self-dual: {0} has no matching dual summand")]
    NotSelfDual(Summand),
    #[error("bad-parity summand {summand} occurs with odd multiplicity {multiplicity}")]
    OddBadParity { summand: Summand, multiplicity: usize },
    #[error("determinant of the parameter is {found}, expected {expected}")]
    Determinant { found: &'static str, expected: &'static str },
    #[error("dimension {found} does not match the standard representation ({expected})")]
    Dimension { found: u64, expected: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid parameter: {0}")]
    Invalid(#[from] Violation),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("gap condition fails for block (t={t}, c={c})")]
    GapCondition { t: u32, c: u32 },
    #[error("parameter has bad-parity or non-real-infinitesimal summands; packets need a good-parity parameter")]
    BadParityResidue,
    #[error("first block is tied to another generator; the component group does not split")]
    NotSplit,
    #[error("negative induction degree {0}")]
    NegativeDegree(i64),
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// The three kinds of failure a caller distinguishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Parse,
    Invalid,
    Unsupported,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Parse { .. } => ErrorClass::Parse,
            Error::Invalid(_) | Error::InvalidGroup(_) => ErrorClass::Invalid,
            _ => ErrorClass::Unsupported,
        }
    }

    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
