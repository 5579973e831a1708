use std::fmt;

use thiserror::Error;

/// Errors raised by the braid, chart and compile layers.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator index {index} out of range for {degree} strands (valid: 1..={max})", max = .degree.saturating_sub(1))]
    IndexOutOfRange { index: i64, degree: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("block index {i} outside 1..={max} for m = {m}", max = .m.saturating_sub(1))]
    RangeError { m: usize, i: usize },
    #[error("boundary braids do not commute")]
    NonCommutingBoundary,
    #[error("invalid movie: {0}")]
    InvalidMovie(String),
    #[error("component {component} has odd Euler characteristic {chi}")]
    OddEulerCharacteristic { component: usize, chi: i64 },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A located failure while reading one of the text formats.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
