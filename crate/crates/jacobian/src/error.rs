use milnorhp_core::SeriesError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable '{name}' at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("negative exponent at position {pos}")]
    NegativeExponent { pos: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("series did not stabilize within k_max = {k_max}; retry with a larger --k-max")]
    InconclusiveTruncation { k_max: usize },
    #[error("the singular locus is not zero-dimensional: {0}")]
    NonIsolated(String),
    #[error("internal invariant failed: {0}")]
    Invariant(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
