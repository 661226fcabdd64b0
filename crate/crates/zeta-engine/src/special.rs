//! The special polynomials z(x, -j) = sum_d x^(-d) S_d(j), their trivial
//! zeros, and the v-adic interpolation polynomials.

use crate::error::{Result, ZetaError};
use crate::powersum::{digit_sum, power_sum};
use algebra_core::{irreducible_test, Fq, FqPoly, Var};

/// A polynomial in x^(-1) with coefficients in A = F_q[T]. Coefficient of
/// x^(-d) is a degree-graded power sum. The constant coefficient is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaPoly {
    field: Fq,
    j: u64,
    /// coeffs[d] multiplies x^(-d); trailing zeros stripped.
    coeffs: Vec<FqPoly>,
    /// Whether the trivial zero at x = 1 has been divided out.
    tilde: bool,
    /// The degree at which the stopping rule fired (recorded for the CLI).
    stop_d: usize,
}

impl ZetaPoly {
    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn j(&self) -> u64 {
        self.j
    }

    pub fn coeffs(&self) -> &[FqPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> FqPoly {
        self.coeffs
            .get(d)
            .cloned()
            .unwrap_or_else(|| FqPoly::zero(&self.field, Var::T))
    }

    /// Degree in x^(-1).
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_tilde(&self) -> bool {
        self.tilde
    }

    pub fn stop_degree(&self) -> usize {
        self.stop_d
    }

    /// Evaluate at x = 1 (sum of the coefficients), exact in A.
    pub fn eval_at_one(&self) -> FqPoly {
        let mut acc = FqPoly::zero(&self.field, Var::T);
        for c in &self.coeffs {
            acc = acc.add(c);
        }
        acc
    }

    pub fn from_parts(field: Fq, j: u64, coeffs: Vec<FqPoly>, tilde: bool, stop_d: usize) -> ZetaPoly {
        let mut coeffs = coeffs;
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        ZetaPoly {
            field,
            j,
            coeffs,
            tilde,
            stop_d,
        }
    }
}

/// z(x, -j): compute S_d(j) for increasing d until d(q-1) exceeds the
/// base-q digit sum of j and two consecutive coefficients vanish exactly.
pub fn zeta_special_poly(field: &Fq, j: u64) -> ZetaPoly {
    let q = field.order();
    if j == 0 {
        // S_d(0) counts monics: q^d = 0 in char p for d >= 1.
        return ZetaPoly::from_parts(
            field.clone(),
            0,
            vec![FqPoly::one(field, Var::T)],
            false,
            0,
        );
    }
    let weight = digit_sum(q, j);
    let mut coeffs = vec![FqPoly::one(field, Var::T)];
    let mut zero_run = 0usize;
    let mut d = 0usize;
    loop {
        d += 1;
        let s = power_sum(field, Var::T, d, j);
        zero_run = if s.is_zero() { zero_run + 1 } else { 0 };
        coeffs.push(s);
        if (d as u64) * (q - 1) > weight && zero_run >= 2 {
            break;
        }
    }
    ZetaPoly::from_parts(field.clone(), j, coeffs, false, d)
}

/// Divide out the trivial zero at x = 1 when j > 0 is divisible by q - 1;
/// identity otherwise. The division by (1 - x^(-1)) must be exact.
pub fn remove_trivial_zero(z: &ZetaPoly) -> Result<ZetaPoly> {
    let q = z.field.order();
    if z.j == 0 || z.j % (q - 1) != 0 {
        let mut out = z.clone();
        out.tilde = true;
        return Ok(out);
    }
    if !z.eval_at_one().is_zero() {
        return Err(ZetaError::TrivialZeroMissing);
    }
    // (1 - u) * q(u) = c(u) in u = x^(-1): q_d = c_d + q_(d-1).
    let mut quot: Vec<FqPoly> = Vec::with_capacity(z.coeffs.len().saturating_sub(1));
    let mut prev = FqPoly::zero(&z.field, Var::T);
    for d in 0..z.coeffs.len().saturating_sub(1) {
        let qd = z.coeff(d).add(&prev);
        prev = qd.clone();
        quot.push(qd);
    }
    Ok(ZetaPoly::from_parts(
        z.field.clone(),
        z.j,
        quot,
        true,
        z.stop_d,
    ))
}

/// The v-adic special polynomial: coefficient of x_v^(-d) is the sum of
/// n^j over monic n of degree d prime to v. By inclusion-exclusion this is
/// S_d(j) - v^j S_(d - deg v)(j).
pub fn vadic_zeta_poly(v: &FqPoly, j: u64) -> Result<ZetaPoly> {
    let field = v.field().clone();
    let dv = v.degree().ok_or(ZetaError::ReducibleModulus)?;
    if dv == 0 || (dv > 1 && !irreducible_test(v)?) {
        return Err(ZetaError::ReducibleModulus);
    }
    let z = zeta_special_poly(&field, j);
    let vj = v.pow_charp(j);
    let top = z.coeffs.len() + dv;
    let mut coeffs = Vec::with_capacity(top);
    for d in 0..top {
        let full = if d < z.coeffs.len() {
            z.coeff(d)
        } else {
            power_sum(&field, Var::T, d, j)
        };
        let c = if d >= dv {
            let lower = if d - dv < z.coeffs.len() {
                z.coeff(d - dv)
            } else {
                power_sum(&field, Var::T, d - dv, j)
            };
            full.sub(&vj.mul(&lower))
        } else {
            full
        };
        coeffs.push(c);
    }
    Ok(ZetaPoly::from_parts(field, j, coeffs, false, z.stop_d))
}
