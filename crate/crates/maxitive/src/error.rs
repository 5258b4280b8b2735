//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} must lie in [0,1], got {value}")]
    NotUnitValue { what: &'static str, value: f64 },

    #[error("dimension mismatch: expected {expected} points, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("point index {index} out of range for a {n}-point space")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("point count {n} unsupported here (must be between 1 and {max})")]
    PointCountOutOfRange { n: usize, max: usize },

    #[error("capacity table must assign all {expected} subsets, got {got} values")]
    WrongValueCount { expected: usize, got: usize },

    #[error("generator index {index} out of range for a subspace with {count} generators")]
    GeneratorIndex { index: usize, count: usize },

    #[error("grid denominator {denom} too coarse, need at least {min}")]
    GridTooCoarse { denom: u32, min: u32 },

    #[error("invalid value grid: {0}")]
    InvalidGrid(String),

    #[error("invalid capacity: {0}")]
    InvalidCapacity(String),

    #[error("function is outside the functional's domain")]
    OutsideDomain,

    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// Checks that `v` is a finite number in `[0,1]`.
pub(crate) fn check_unit(what: &'static str, v: f64) -> Result<()> {
    if v.is_finite() && (0.0..=1.0).contains(&v) {
        Ok(())
    } else {
        Err(Error::NotUnitValue { what, value: v })
    }
}
