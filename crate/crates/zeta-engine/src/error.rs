use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZetaError {
    #[error("trivial-zero division requested but z(1) != 0; upstream computation is wrong")]
    TrivialZeroMissing,
    #[error("j must be positive and divisible by r - 1 (got j = {0})")]
    BadTrivialZeroParameter(u64),
    #[error("v must be irreducible")]
    ReducibleModulus,
    #[error("row coefficient S_0 must be 1")]
    NotNormalized,
    #[error("unsupported CM example configuration: {0}")]
    UnsupportedExample(String),
    #[error("series error: {0}")]
    Series(#[from] local_series::SeriesError),
    #[error("algebra error: {0}")]
    Algebra(#[from] algebra_core::AlgebraError),
}

pub type Result<T> = std::result::Result<T, ZetaError>;
