use std::fmt;

use thiserror::Error;

use crate::core3d::Axis;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// 1-based position of a parse error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Location {
    Line {
        line: usize,
    },
    Column {
        line: usize,
        column: usize,
    },
    /// JSON path such as `layers[1][0][2]`; indices are 1-based.
    Json(String),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Line { line } => write!(f, "line {line}"),
            Location::Column { line, column } => write!(f, "line {line}, column {column}"),
            Location::Json(path) => write!(f, "at {path}"),
        }
    }
}

pub const NOT_CUBIC: &str = "A is not square, cannot calculate the determinant";
pub const ORDER_TOO_HIGH: &str = "A is higher than the third order, hence can not be calculated.";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{NOT_CUBIC} ({detail})")]
    NotCubic { detail: String },

    #[error("{ORDER_TOO_HIGH} (order {order})")]
    OrderTooHigh { order: usize },

    #[error("order must be at least 1")]
    EmptyOrder,

    #[error("index ({i}, {j}, {k}) out of range for order {order}")]
    IndexOutOfRange { i: usize, j: usize, k: usize, order: usize },

    #[error("{axis} index {index} out of range for order {order}")]
    LayerOutOfRange { axis: Axis, index: usize, order: usize },

    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("an order-1 matrix has no sub-cubic-matrix")]
    OrderUnderflow,

    #[error("exact scalar arithmetic overflowed 64 bits")]
    Overflow,

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("{location}: {reason}")]
    Parse { location: Location, reason: String },

    #[error("invalid generator range {0}; expected 1..={max}", max = crate::verify::MAX_RANGE)]
    InvalidRange(i64),
}

impl Error {
    pub(crate) fn parse(location: Location, reason: impl Into<String>) -> Self {
        Error::Parse { location, reason: reason.into() }
    }
}
