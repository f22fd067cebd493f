use thiserror::Error;

use crate::geometry::Point;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("collinear input: {0:?}, {1:?}, {2:?}")]
    CollinearInput(Point, Point, Point),

    #[error("duplicate point at ({x}, {y})")]
    DuplicatePoint { x: i64, y: i64 },

    #[error("coordinate out of range: {0}")]
    CoordinateRange(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("polygon is not simple")]
    NotSimple,

    #[error("oracle cap exceeded: {size} points > cap {cap}")]
    OracleCapExceeded { size: usize, cap: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("classification invariant violated for pair ({p}, {q}): {reason}")]
    ClassificationInvariantViolated { p: usize, q: usize, reason: String },

    #[error("witness construction failed: {0}")]
    WitnessConstructionFailed(String),

    #[error("construction unverified: {0}")]
    ConstructionUnverified(String),
}

pub type Result<T> = std::result::Result<T, Error>;
