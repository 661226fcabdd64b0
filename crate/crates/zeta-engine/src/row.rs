//! Rows of the two-variable zeta function: S_d(y) = sum of <n>^(-y) over
//! monic n of degree d, as truncated series at the infinite place, plus
//! the uniformizer-covariance check.

use crate::error::{Result, ZetaError};
use algebra_core::{Fq, MonicIter, Var};
use local_series::{
    one_unit_part, one_unit_part_wrt, unit_pow_padic, Completion, PadicInt, ValSeries,
};

/// One row of coefficients S_0(y), ..., S_dmax(y).
#[derive(Clone, Debug)]
pub struct ZetaSeriesRow {
    pub y: PadicInt,
    pub coeffs: Vec<ValSeries>,
    pub prec: usize,
}

impl ZetaSeriesRow {
    pub fn completion(&self) -> &Completion {
        self.coeffs[0].completion()
    }
}

/// Compute the row by direct summation over monic polynomials. With
/// `uniformizer_ratio = Some(u)` the 1-unit parts are taken with respect
/// to the alternative positive uniformizer pi/u.
pub fn zeta_series_row(
    field: &Fq,
    y: &PadicInt,
    d_max: usize,
    prec: usize,
    uniformizer_ratio: Option<&ValSeries>,
) -> Result<ZetaSeriesRow> {
    let comp = Completion::infinity(field);
    let minus_y = y.neg();
    let mut coeffs = Vec::with_capacity(d_max + 1);
    for d in 0..=d_max {
        if d == 0 {
            coeffs.push(comp.one(prec));
            continue;
        }
        let mut acc = comp.zero(prec as i64);
        for n in MonicIter::new(field, Var::T, d) {
            let unit = match uniformizer_ratio {
                None => one_unit_part(&n, prec)?,
                Some(u) => one_unit_part_wrt(&n, u, prec)?,
            };
            let term = unit_pow_padic(&unit, &minus_y, prec)?;
            acc = acc.add(&term)?;
        }
        coeffs.push(acc);
    }
    Ok(ZetaSeriesRow {
        y: y.clone(),
        coeffs,
        prec,
    })
}

/// Report of the uniformizer-covariance identity S_d^(1) = u^(-dy) S_d^(2)
/// and of the zero sets matching after scaling by u^y.
#[derive(Clone, Debug)]
pub struct PiCovarianceReport {
    pub coeffs_match: bool,
    pub mismatched_d: Vec<usize>,
    pub zeros_match: Option<bool>,
    pub zero_count: usize,
}

/// Verify covariance under the uniformizer change pi -> pi/u at exact or
/// p-adic y, to the given precision; optionally compare certified zero
/// sets (scaled by u^y) when both rows admit fully certified polygons.
pub fn pi_covariance_check(
    field: &Fq,
    y: &PadicInt,
    u: &ValSeries,
    d_max: usize,
    prec: usize,
    compare_zeros: bool,
) -> Result<PiCovarianceReport> {
    if !u.is_one_unit() {
        return Err(ZetaError::Series(local_series::SeriesError::NotOneUnit));
    }
    let row1 = zeta_series_row(field, y, d_max, prec, None)?;
    let row2 = zeta_series_row(field, y, d_max, prec, Some(u))?;
    let mut mismatched = Vec::new();
    for d in 0..=d_max {
        let scale = unit_pow_padic(u, &y.mul_int(-(d as i64)), prec)?;
        let rhs = row2.coeffs[d].mul(&scale)?;
        let lhs = &row1.coeffs[d];
        let p = lhs.abs_prec().min(rhs.abs_prec());
        if !lhs.agrees_to(&rhs, p) {
            mismatched.push(d);
        }
    }
    let mut zeros_match = None;
    let mut zero_count = 0;
    if compare_zeros && mismatched.is_empty() {
        let z1 = certified_zeros(&row1)?;
        let z2 = certified_zeros(&row2)?;
        let uy = unit_pow_padic(u, y, prec)?;
        if z1.len() == z2.len() {
            zero_count = z1.len();
            let mut all = true;
            for (a, b) in z1.iter().zip(z2.iter()) {
                // Zeros in z = x^(-1) scale by u^y from row 2 to row 1.
                let scaled = b.mul(&uy)?;
                let p = a.abs_prec().min(scaled.abs_prec());
                if !a.agrees_to(&scaled, p) {
                    all = false;
                }
            }
            zeros_match = Some(all);
        } else {
            zeros_match = Some(false);
        }
    }
    Ok(PiCovarianceReport {
        coeffs_match: mismatched.is_empty(),
        mismatched_d: mismatched,
        zeros_match,
        zero_count,
    })
}

/// Zeros certified by length-1 integer-slope segments, in slope order.
fn certified_zeros(row: &ZetaSeriesRow) -> Result<Vec<ValSeries>> {
    let np = local_series::polygon_of(&row.coeffs)?;
    let mut out = Vec::new();
    for seg in &np.segments {
        if seg.length == 1 && seg.slope.is_integer() {
            let lift_prec = (row.prec / 2).max(8);
            out.push(local_series::hensel_zero_lift(&row.coeffs, seg, lift_prec)?);
        }
    }
    Ok(out)
}
