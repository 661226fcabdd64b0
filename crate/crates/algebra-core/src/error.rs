use thiserror::Error;

/// Errors raised by field, polynomial and extension arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("inversion of zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("operands have different indeterminates")]
    VarMismatch,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("{0} must not be the zero polynomial")]
    ZeroInput(&'static str),
    #[error("operation requires a non-constant polynomial")]
    ConstantInput,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is not irreducible over F_p")]
    ReducibleModulus,
    #[error("polynomial is not irreducible")]
    NotIrreducible,
    #[error("minimal polynomial is not separable (gcd(f, f') != 1)")]
    NotSeparable,
    #[error("operation is not defined in characteristic 2")]
    EvenCharacteristic,
    #[error("field order {0} exceeds the configured word budget")]
    FieldTooLarge(u64),
    #[error("malformed serialized value: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
