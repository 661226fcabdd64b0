//! The Carlitz module and its tensor powers as operator images:
//! the F_q-algebra map determined by T -> (theta I + N) tau^0 + V tau,
//! with N the upper-superdiagonal nilpotent and V the lower-left corner
//! unit. For n = 1 this is the Carlitz module T -> theta tau^0 + tau.

use crate::tau::{Matrix, TauMatSeries, TauScalar};
use algebra_core::{Fq, FqPoly, RatFn, Var};

/// theta as a rational function in the scalar copy of T.
pub fn theta(field: &Fq) -> RatFn {
    RatFn::from_poly(FqPoly::gen(field, Var::T))
}

/// The image of T: (theta I + N) tau^0 + V tau, dimension n.
pub fn t_image<S: TauScalar>(theta: &S, n: usize) -> TauMatSeries<S> {
    let mut a0 = Matrix::zero_like(n, theta);
    for i in 0..n {
        a0.set(i, i, theta.clone());
        if i + 1 < n {
            a0.set(i, i + 1, theta.one_like());
        }
    }
    let mut a1 = Matrix::zero_like(n, theta);
    a1.set(n - 1, 0, theta.one_like());
    TauMatSeries::from_coeffs(vec![a0, a1], None)
}

/// Image of a under the unique F_q-algebra map with the pinned T-image
/// (Horner in the twisted composition ring).
pub fn tensor_power_action_generic<S: TauScalar>(
    theta: &S,
    n: usize,
    a: &FqPoly,
) -> TauMatSeries<S> {
    let x = t_image(theta, n);
    let mut acc = TauMatSeries::zero(n, theta, None);
    for c in a.coeffs().iter().rev() {
        acc = acc.compose(&x);
        if !c.is_zero() {
            let scalar = theta.from_const(c);
            let mut m = Matrix::zero_like(n, theta);
            for i in 0..n {
                m.set(i, i, scalar.clone());
            }
            acc = acc.add(&TauMatSeries::from_coeffs(vec![m], None));
        }
    }
    acc
}

/// Tensor power action over the exact rational scalar field.
pub fn tensor_power_action(n: usize, a: &FqPoly) -> TauMatSeries<RatFn> {
    tensor_power_action_generic(&theta(a.field()), n, a)
}

/// The Carlitz module action (n = 1).
pub fn carlitz_action(a: &FqPoly) -> TauMatSeries<RatFn> {
    tensor_power_action(1, a)
}
