//! Full multi-valued operators e(M log tau): the composition
//! exp o (M tau^0) o log, defined whenever exp and log are mutually
//! inverse to the working tau-degree (checked). The map M -> e(M log tau)
//! is an F_q-algebra isomorphism onto its image, extending a -> C_a.

use crate::error::{LiftError, Result};
use carlitz_modules::{Matrix, TauMatSeries, TauScalar};

pub fn multivalued_operator<S: TauScalar>(
    m: &Matrix<S>,
    exp: &TauMatSeries<S>,
    log: &TauMatSeries<S>,
    prec: usize,
) -> Result<TauMatSeries<S>> {
    let sample = &exp.coeffs[0].data[0];
    let id = TauMatSeries::identity(exp.dim, sample, Some(prec));
    if !exp.compose(log).truncate(prec).agrees_to(&id, prec)
        || !log.compose(exp).truncate(prec).agrees_to(&id, prec)
    {
        return Err(LiftError::NotInverse);
    }
    let middle = TauMatSeries::from_coeffs(vec![m.clone()], Some(prec));
    Ok(exp.truncate(prec).compose(&middle).compose(&log.truncate(prec)))
}
