use thiserror::Error;

/// Errors raised by the monopole toolkit.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("n = {n} is outside the supported range 1..={max}")]
    UnsupportedRank { n: usize, max: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix does not preserve the chiral subspaces (off-block norm {off_block:.3e})")]
    OddElement { off_block: f64 },

    #[error("point is degenerate for this chart: {0}")]
    DegeneratePoint(String),

    #[error("point lies outside the {0} chart")]
    OutsideChart(&'static str),

    #[error("vector is not a unit vector (norm {0})")]
    NotUnit(f64),

    #[error("form degree {degree} exceeds frame dimension {frame_dim}")]
    DegreeOverflow { degree: usize, frame_dim: usize },

    #[error("form has degree {degree}, expected top degree {frame_dim}")]
    NotTopDegree { degree: usize, frame_dim: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("report error: {0}")]
    Report(String),
}

pub type Result<T> = std::result::Result<T, Error>;
