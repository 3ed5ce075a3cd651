use thiserror::Error;

use crate::qarith::QPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Polynomial division left a nonzero remainder.
    #[error("polynomial division is not exact (remainder {remainder})")]
    NonDivisible { remainder: QPoly },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("value {value} out of range 1..={max}")]
    OutOfRange { value: usize, max: usize },

    #[error("letter {letter} occurs {count} times but only {allowed} are available")]
    ContentOverflow {
        letter: usize,
        count: usize,
        allowed: usize,
    },

    #[error("{outer} / {inner} is not a horizontal strip")]
    NotAStrip { outer: String, inner: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid rook placement: {0}")]
    InvalidPlacement(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
