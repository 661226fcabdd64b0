use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("element is not a unit (zero constant term)")]
    NotAUnit,
    #[error("Newton start must be nilpotent")]
    NotNilpotent,
    #[error("degenerate lifting problem (need degree >= 1, nonzero ends)")]
    DegenerateProblem,
    #[error("exp and log are not mutually inverse to the requested degree")]
    NotInverse,
    #[error("insufficient v-adic precision: need at least {needed}")]
    InsufficientPrecision { needed: usize },
    #[error("minimal polynomial is not separable at the working precision")]
    NotSeparableAtPrecision,
    #[error("algebra error: {0}")]
    Algebra(#[from] algebra_core::AlgebraError),
    #[error("series error: {0}")]
    Series(#[from] local_series::SeriesError),
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

pub type Result<T> = std::result::Result<T, LiftError>;
