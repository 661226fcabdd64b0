//! The multi-valued-operator calculus: tangent algebras R[eps]/(eps^t),
//! extension of the operator tangent action to K and to separable
//! algebraic elements, p-power obstruction detection, full multi-valued
//! operators e(M log tau), and the v-adic variant of the lift.

pub mod error;
pub mod lift;
pub mod mvo;
pub mod obstruction;
pub mod tangent;
pub mod vadic;

pub use error::{LiftError, Result};
pub use lift::{lift_residual, separable_lift, separable_lift_from, LiftProblem};
pub use mvo::multivalued_operator;
pub use obstruction::{liftability_check, verify_lift_witness, Liftability};
pub use tangent::{
    tangent_extend_ratfn, tangent_extend_series, tangent_invert, tangent_of_operator, TangentElt,
};
pub use vadic::{vadic_separable_lift, VadicExt, VadicExtElt};
