//! Exact arithmetic over finite fields F_q and the rings built from them:
//! univariate polynomials (with subquadratic multiplication and
//! Frobenius-digit powering), rational functions, separable algebraic
//! extensions, and the factorization/irreducibility primitives the rest of
//! the workspace leans on.
//!
//! Everything is immutable after construction and safe to share across
//! threads; the only mutable state is the explicitly threaded [`DetRng`].

pub mod dense;
pub mod error;
pub mod ext;
pub mod factor;
pub mod field;
pub mod poly;
pub mod ratfn;
pub mod rng;
pub mod serial;

pub use error::{AlgebraError, Result};
pub use ext::{ext_arith, ExtField, ExtOp, FieldExtElt, UPoly};
pub use factor::{irreducible_test, monic_irreducibles, poly_factor, Factorization};
pub use field::{field_ops, FieldOp, Fq, FqElem};
pub use poly::{poly_mul, FqPoly, MonicIter, Var};
pub use ratfn::RatFn;
pub use rng::DetRng;
