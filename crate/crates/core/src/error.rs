use thiserror::Error;

use crate::varieties::ProjectivePoint;

/// Errors raised by the arithmetic and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported characteristic {0}: only 2 and 3 are supported")]
    UnsupportedCharacteristic(u32),
    #[error("extension degree {0} out of range 1..=20")]
    DegreeOutOfRange(u32),
    #[error("operands belong to different fields: {0} vs {1}")]
    MixedFields(String, String),
    #[error("inversion of zero")]
    InverseOfZero,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation requires a non-constant polynomial")]
    ConstantPolynomial,
    #[error("operation requires a nonzero function")]
    ZeroFunction,
    #[error("function has a pole at {0}")]
    Pole(String),
    #[error("degenerate Moebius map: ad - bc = 0")]
    DegenerateMap,
    #[error("GF({p}^{from}) does not embed in GF({p}^{to})")]
    NotASubfield { p: u32, from: u32, to: u32 },
    #[error("quadratic character requested in characteristic 2")]
    EvenCharacteristic,
    #[error("cover is not in standard form: {0}")]
    NotStandardForm(String),
    #[error("non-integral value: {0}")]
    NonIntegral(String),
    #[error("Weil bound violated: {0}")]
    WeilViolation(String),
    #[error("negative place count: {0}")]
    NegativeCount(String),
    #[error("insufficient data: {0}")]
    Insufficient(String),
    #[error("model failed the smoothness probe at {} point(s)", .0.len())]
    Singular(Vec<ProjectivePoint>),
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("computed values disagree: {0}")]
    Mismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
