use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CarlitzError {
    #[error("insufficient precision: need at least {needed}")]
    InsufficientPrecision { needed: usize },
    #[error("operator coefficient is not integral (unexpected denominator)")]
    NonIntegralEntry,
    #[error("exp and log are not mutually inverse to the requested degree")]
    NotInverse,
    #[error("series error: {0}")]
    Series(#[from] local_series::SeriesError),
    #[error("algebra error: {0}")]
    Algebra(#[from] algebra_core::AlgebraError),
}

pub type Result<T> = std::result::Result<T, CarlitzError>;
