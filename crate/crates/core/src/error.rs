use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("inexact division by a power of (1 - t)")]
    InexactDivision,
    #[error("no subcase applies to (a, b, d) = ({a}, {b}, {d})")]
    ClassificationGap { a: i64, b: i64, d: i64 },
}

pub type Result<T, E = SeriesError> = std::result::Result<T, E>;
