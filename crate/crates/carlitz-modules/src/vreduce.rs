//! v-adic reduction of tensor-power actions: the operator coefficients of
//! C^(x)n_a are A_v-integral for v-adic a, so a polynomial approximant of
//! a determines the reduced operator modulo v-powers. At tau-degree i the
//! approximation a mod v^M pins the coefficient mod v^(M - i - n + 1)
//! (the tangent part alone loses n - 1 powers through the hyperderivative
//! continuity bound; each tau-degree defers one more factor of v).

use crate::action::tensor_power_action;
use crate::error::{CarlitzError, Result};
use crate::tau::{Matrix, TauMatSeries};
use algebra_core::FqPoly;
use local_series::{Completion, ValSeries};

/// Reduce the action of a polynomial approximant (given mod v^m_in) to
/// coefficients in A/v^m_out, through tau-degree tau_cutoff.
pub fn vadic_reduce_action(
    n: usize,
    approx: &FqPoly,
    v: &FqPoly,
    m_in: usize,
    m_out: usize,
    tau_cutoff: usize,
) -> Result<TauMatSeries<ValSeries>> {
    if m_in < m_out + tau_cutoff + n - 1 {
        return Err(CarlitzError::InsufficientPrecision {
            needed: m_out + tau_cutoff + n - 1,
        });
    }
    let comp = Completion::finite(v)?;
    let exact = tensor_power_action(n, approx).truncate(tau_cutoff);
    let mut coeffs = Vec::with_capacity(tau_cutoff + 1);
    for i in 0..=tau_cutoff {
        let m = exact.coeff(i);
        let sample = comp.zero(m_out as i64);
        let mut out = Matrix {
            n,
            data: vec![sample; n * n],
        };
        for r in 0..n {
            for c in 0..n {
                let entry = m.at(r, c);
                if !entry.den().is_one() {
                    return Err(CarlitzError::NonIntegralEntry);
                }
                let reduced = comp.embed_poly(entry.num(), m_out)?.truncate_abs(m_out as i64);
                out.set(r, c, reduced);
            }
        }
        coeffs.push(out);
    }
    Ok(TauMatSeries::from_coeffs(coeffs, Some(tau_cutoff)))
}
