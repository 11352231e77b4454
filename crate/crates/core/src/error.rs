use thiserror::Error;

pub type Result<T> = std::result::Result<T, FrechetError>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FrechetError {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("a point needs at least one coordinate")]
    ZeroDimension,

    #[error("non-finite coordinate {value} at index {index}")]
    NonFinite { index: usize, value: f64 },

    #[error("a closed curve needs at least one vertex")]
    EmptyCurve,

    #[error("parameter {t} outside [0, {max}]")]
    ParameterOutOfRange { t: f64, max: f64 },

    #[error("eps must be finite and >= 0, got {0}")]
    InvalidEps(f64),

    #[error("tolerance must be finite and > 0, got {0}")]
    InvalidTolerance(f64),

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("curve file: {0}")]
    CurveFile(String),
}
