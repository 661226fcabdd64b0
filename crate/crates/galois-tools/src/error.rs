use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaloisError {
    #[error("operation is not defined in characteristic 2")]
    EvenCharacteristic,
    #[error("expected a monic quartic")]
    NotMonicQuartic,
    #[error("expected a monic cubic")]
    NotMonicCubic,
    #[error("divisor must be monic")]
    NotMonic,
    #[error("zero input")]
    ZeroInput,
    #[error("modulus must be irreducible")]
    ReducibleModulus,
    #[error("leading coefficient vanishes modulo v")]
    LeadingCoeffVanishes,
    #[error("mod-prime reduction needs a prime base field for deg v > 1")]
    CompositeBase,
    #[error("algebra error: {0}")]
    Algebra(#[from] algebra_core::AlgebraError),
}

pub type Result<T> = std::result::Result<T, GaloisError>;
