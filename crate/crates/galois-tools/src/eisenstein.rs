//! Eisenstein's irreducibility criterion at primes of A, and the witness
//! scan over primes of bounded degree.

use crate::error::{GaloisError, Result};
use crate::xpoly::XPolyOverA;
use algebra_core::{irreducible_test, monic_irreducibles, FqPoly, Var};

/// Outcome of the criterion in both orientations: `forward` tests with the
/// constant term as the Eisenstein end, `reversed` tests the reciprocal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EisensteinOutcome {
    pub forward: bool,
    pub reversed: bool,
}

impl EisensteinOutcome {
    pub fn any(&self) -> bool {
        self.forward || self.reversed
    }
}

fn divides(v: &FqPoly, c: &FqPoly) -> bool {
    c.is_zero() || c.rem(v).map_or(false, |r| r.is_zero())
}

fn eisenstein_oriented(coeffs: &[FqPoly], v: &FqPoly) -> bool {
    // coeffs ascending; leading coefficient last.
    let n = coeffs.len() - 1;
    if divides(v, &coeffs[n]) {
        return false;
    }
    for c in &coeffs[..n] {
        if !divides(v, c) {
            return false;
        }
    }
    // v^2 must not divide the constant term (which must itself be nonzero).
    if coeffs[0].is_zero() {
        return false;
    }
    !divides(&v.mul(v), &coeffs[0])
}

/// The criterion for a primitive f at an irreducible v, both orientations.
pub fn eisenstein_check(f: &XPolyOverA, v: &FqPoly) -> Result<EisensteinOutcome> {
    let dv = v.degree().ok_or(GaloisError::ReducibleModulus)?;
    if dv == 0 || (dv > 1 && !irreducible_test(v)?) {
        return Err(GaloisError::ReducibleModulus);
    }
    if f.degree().map_or(true, |d| d < 1) {
        return Err(GaloisError::ZeroInput);
    }
    let coeffs = f.coeffs().to_vec();
    let mut rev = coeffs.clone();
    rev.reverse();
    Ok(EisensteinOutcome {
        forward: eisenstein_oriented(&coeffs, v),
        reversed: eisenstein_oriented(&rev, v),
    })
}

/// All Eisenstein witnesses of degree <= bound, sorted by (degree, lex).
/// Emptiness does not disprove irreducibility.
pub fn eisenstein_scan(f: &XPolyOverA, degree_bound: usize) -> Result<Vec<FqPoly>> {
    let field = f.field().clone();
    let mut out = Vec::new();
    for d in 1..=degree_bound {
        for v in monic_irreducibles(&field, Var::T, d) {
            if eisenstein_check(f, &v)?.any() {
                out.push(v);
            }
        }
    }
    Ok(out)
}
