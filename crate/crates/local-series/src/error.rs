use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("inversion of (apparent) zero series")]
    DivisionByZero,
    #[error("operands live at different places")]
    PlaceMismatch,
    #[error("series is not a 1-unit")]
    NotOneUnit,
    #[error("polynomial is not monic (divide by its sign first)")]
    NotMonic,
    #[error("zero input")]
    ZeroInput,
    #[error(
        "p-adic precision shortfall: need y mod p^{required} but only p^{available} is known"
    )]
    PadicPrecision { required: u32, available: u32 },
    #[error("series precision shortfall: {0}")]
    Precision(String),
    #[error("newton polygon needs at least one finite valuation")]
    EmptyPolygon,
    #[error("segment is not a length-1 integer-slope segment; zero not certified rational")]
    NotCertifiedRational,
    #[error("finite places require a prime base field (m = 1)")]
    CompositeBaseAtFinitePlace,
    #[error("uniformizer polynomial is not irreducible")]
    ReducibleUniformizer,
    #[error("algebra error: {0}")]
    Algebra(#[from] algebra_core::AlgebraError),
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

pub type Result<T> = std::result::Result<T, SeriesError>;
