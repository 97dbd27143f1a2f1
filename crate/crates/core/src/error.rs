//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by constructors, parsers, and checkers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed token `{0}`")]
    MalformedToken(String),

    #[error("value {value} out of range 1..={n}")]
    ValueOutOfRange { value: usize, n: usize },

    #[error("duplicate value {0}")]
    DuplicateValue(usize),

    #[error("color {color} out of range 0..={}", k - 1)]
    ColorOutOfRange { color: usize, k: usize },

    #[error("number of colors k must be at least 1")]
    ZeroColors,

    #[error("expected k={expected}, got k={got}")]
    ColorCountMismatch { expected: usize, got: usize },

    #[error("lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("parts are not weakly decreasing ({0} followed by {1})")]
    NotWeaklyDecreasing(u64, u64),

    #[error("partition has {parts} nonzero parts, capacity is {capacity}")]
    TooManyParts { parts: usize, capacity: usize },

    #[error("part {part} is not divisible by {k}")]
    PartNotDivisible { part: u64, k: usize },

    #[error("labeled partition is not in Q_pi")]
    NotInQPi,

    #[error("position {position} out of range 1..={max}")]
    PositionOutOfRange { position: usize, max: usize },

    #[error("bracket order must be at least 1")]
    BracketOrderZero,

    #[error("permutation has a fixed point at position {0}")]
    UnexpectedFixedPoint(usize),

    #[error("operation requires {expected} colors, permutation has {got}")]
    WrongGroup { expected: usize, got: usize },

    #[error("enumerating {objects} objects exceeds the ceiling of {ceiling}")]
    CeilingExceeded { objects: u128, ceiling: u128 },

    #[error("polynomial degree overflows the address space")]
    DegreeOverflow,
}

pub type Result<T> = std::result::Result<T, Error>;
