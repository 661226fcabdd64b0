//! Reduction of A[x]-polynomials modulo a prime v of A, and the resulting
//! irreducibility certificate: irreducible mod v implies irreducible over
//! F_q(T) for primitive monic-degree inputs.

use crate::error::{GaloisError, Result};
use crate::xpoly::XPolyOverA;
use algebra_core::{irreducible_test, Fq, FqPoly, Var};

/// The residue field A/v together with the reduction map.
pub struct ResidueCtx {
    pub v: FqPoly,
    pub field: Fq,
}

impl ResidueCtx {
    pub fn new(v: &FqPoly) -> Result<ResidueCtx> {
        let base = v.field().clone();
        let dv = v.degree().ok_or(GaloisError::ReducibleModulus)?;
        if dv == 0 || (dv > 1 && !irreducible_test(v)?) {
            return Err(GaloisError::ReducibleModulus);
        }
        let v = v.clone().into_monic();
        let field = if dv == 1 {
            base
        } else {
            if base.m() != 1 {
                return Err(GaloisError::CompositeBase);
            }
            let modulus: Vec<u64> = v.coeffs().iter().map(|c| c.as_int()).collect();
            Fq::extension(base.p(), &modulus)?
        };
        Ok(ResidueCtx { v, field })
    }

    /// c(T) mod v as a residue-field element.
    pub fn reduce_scalar(&self, c: &FqPoly) -> Result<algebra_core::FqElem> {
        let r = c.rem(&self.v)?;
        if self.v.degree() == Some(1) {
            // A/(T - c0) is the base field; the remainder is a constant.
            return Ok(if r.is_zero() {
                self.field.zero()
            } else {
                r.coeff(0)
            });
        }
        let rep: Vec<u64> = (0..self.field.m()).map(|i| r.coeff(i).as_int()).collect();
        Ok(self.field.elem(&rep))
    }

    /// Reduce an x-polynomial coefficient-wise into (A/v)[x].
    pub fn reduce_xpoly(&self, f: &XPolyOverA) -> Result<FqPoly> {
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| self.reduce_scalar(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(FqPoly::new(&self.field, Var::X, coeffs))
    }
}

/// True iff f mod v is irreducible over A/v. Requires v not dividing the
/// leading coefficient (so the degree is preserved); for primitive f this
/// certifies irreducibility over F_q(T).
pub fn irreducible_mod_prime(f: &XPolyOverA, v: &FqPoly) -> Result<bool> {
    let ctx = ResidueCtx::new(v)?;
    let lead = f
        .coeffs()
        .last()
        .ok_or(GaloisError::ZeroInput)?;
    if ctx.reduce_scalar(lead)?.is_zero() {
        return Err(GaloisError::LeadingCoeffVanishes);
    }
    let reduced = ctx.reduce_xpoly(f)?;
    Ok(irreducible_test(&reduced)?)
}
