//! The separable lifting theorem, computationally: given lambda with
//! separable minimal polynomial f = sum a_i u^i over A, find the unique
//! nilpotent eps_lambda with
//!
//!   sum_i E_(a_i,*) (lambda-bar + eps_lambda)^i = 0
//!
//! in k(lambda)[eps]/(eps^t). Newton iteration on g(X) = sum E_(a_i,*)
//! (lambda-bar + X)^i starting at X = 0: g(0) is nilpotent because
//! f(lambda-bar) = 0, and g'(0) = f'(lambda-bar) + nilpotent is a unit by
//! separability, so the eps-order of the residual doubles each step.

use crate::error::{LiftError, Result};
use crate::tangent::{tangent_of_operator, TangentElt};
use algebra_core::{ExtField, FieldExtElt, FqPoly, RatFn, UPoly, Var};
use carlitz_modules::TauScalar;

/// A lifting instance: operator coefficients of the minimal polynomial,
/// the nilpotency order, and the scalar extension k[u]/(theta f).
#[derive(Clone, Debug)]
pub struct LiftProblem {
    /// a_0, ..., a_e in A (ascending powers of u); a_e must be a nonzero
    /// constant after monic normalization of the scalar image.
    pub coeffs: Vec<FqPoly>,
    pub t: usize,
    pub ext: ExtField,
}

impl LiftProblem {
    /// Build the problem; the scalar minimal polynomial is the theta image
    /// normalized monic. Separability is checked by the extension
    /// constructor; irreducibility is the caller's contract.
    pub fn new(coeffs: Vec<FqPoly>, t: usize) -> Result<LiftProblem> {
        if coeffs.len() < 2 {
            return Err(LiftError::DegenerateProblem);
        }
        if coeffs.last().map_or(true, |c| c.is_zero()) {
            return Err(LiftError::DegenerateProblem);
        }
        if coeffs[0].is_zero() {
            // a_0 = 0 would make u = 0 a root; the paper's setup has
            // a_0 != 0.
            return Err(LiftError::DegenerateProblem);
        }
        let field = coeffs[0].field().clone();
        let lead = RatFn::from_poly(coeffs.last().unwrap().clone());
        let scalar_coeffs: Vec<RatFn> = coeffs
            .iter()
            .map(|c| {
                RatFn::from_poly(c.clone())
                    .div(&lead)
                    .expect("nonzero leading coefficient")
            })
            .collect();
        let _ = field;
        let ext = ExtField::new(UPoly::new(scalar_coeffs), Var::U)?;
        Ok(LiftProblem { coeffs, t, ext })
    }

    pub fn lambda(&self) -> FieldExtElt {
        self.ext.generator()
    }
}

/// E_(a,*) with coefficients pushed into the extension field.
fn tangent_in_ext(a: &FqPoly, t: usize, ext: &ExtField) -> TangentElt<FieldExtElt> {
    let base = tangent_of_operator(a, t);
    TangentElt::new(
        t,
        base.coeffs.iter().map(|c| ext.from_base(c.clone())).collect(),
    )
}

/// Evaluate g and g' at X (both as tangent elements).
pub(crate) fn eval_g<S: TauScalar>(
    tangents: &[TangentElt<S>],
    lambda: &TangentElt<S>,
    x: &TangentElt<S>,
) -> (TangentElt<S>, TangentElt<S>) {
    let base = lambda.add(x);
    let mut g = tangents[0].zero_like();
    let mut dg = tangents[0].zero_like();
    // Horner for both value and derivative.
    for e in (0..tangents.len()).rev() {
        dg = dg.mul(&base).add(&g);
        g = g.mul(&base).add(&tangents[e]);
    }
    (g, dg)
}

/// The generic Newton engine: solve sum tangents[i] (lambda + X)^i = 0
/// for nilpotent X over any scalar ring with unit inversion. `converged`
/// decides when the residual counts as zero (exact domains test for zero;
/// truncated domains test valuations).
pub(crate) fn newton_lift<S: TauScalar>(
    tangents: &[TangentElt<S>],
    lambda: &TangentElt<S>,
    start: &TangentElt<S>,
    t: usize,
    converged: &dyn Fn(&TangentElt<S>) -> bool,
) -> Result<TangentElt<S>> {
    if !start.is_nilpotent() {
        return Err(LiftError::NotNilpotent);
    }
    let mut x = start.clone();
    // eps-order of the residual doubles per step.
    let max_iter = (usize::BITS - t.leading_zeros()) as usize + 2;
    for _ in 0..=max_iter {
        let (g, dg) = eval_g(tangents, lambda, &x);
        if converged(&g) {
            if !x.is_nilpotent() {
                return Err(LiftError::Internal("lift acquired a constant term"));
            }
            return Ok(x);
        }
        if !dg.is_unit() {
            return Err(LiftError::NotAUnit);
        }
        x = x.sub(&g.div(&dg)?);
    }
    Err(LiftError::Internal("newton iteration failed to converge"))
}

/// The unique nilpotent solution eps_lambda, starting Newton at `start`
/// (any nilpotent; zero is the canonical choice).
pub fn separable_lift_from(
    problem: &LiftProblem,
    start: &TangentElt<FieldExtElt>,
) -> Result<TangentElt<FieldExtElt>> {
    let t = problem.t;
    let ext = &problem.ext;
    let tangents: Vec<TangentElt<FieldExtElt>> = problem
        .coeffs
        .iter()
        .map(|a| tangent_in_ext(a, t, ext))
        .collect();
    let lambda = TangentElt::scalar(t, ext.generator());
    newton_lift(&tangents, &lambda, start, t, &|g| g.is_zero())
}

/// The canonical lift (Newton from zero).
pub fn separable_lift(problem: &LiftProblem) -> Result<TangentElt<FieldExtElt>> {
    let zero = TangentElt::scalar(problem.t, problem.ext.zero());
    separable_lift_from(problem, &zero)
}

/// Substitute the full tangent E_(lambda,*) = lambda-bar + eps back into
/// the operator equation; zero means the lift is exact.
pub fn lift_residual(
    problem: &LiftProblem,
    eps: &TangentElt<FieldExtElt>,
) -> TangentElt<FieldExtElt> {
    let tangents: Vec<TangentElt<FieldExtElt>> = problem
        .coeffs
        .iter()
        .map(|a| tangent_in_ext(a, problem.t, &problem.ext))
        .collect();
    let lambda = TangentElt::scalar(problem.t, problem.ext.generator());
    eval_g(&tangents, &lambda, eps).0
}
