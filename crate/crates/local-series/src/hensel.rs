//! Extraction of base-rational zeros certified by the Newton polygon.
//!
//! Only length-1 integer-slope segments are lifted: those certify a simple
//! zero of the series in the base completion. The polynomial is rescaled so
//! the segment sits at height 0 (z = pi^m w, divided by pi^V with V the
//! hull minimum); the residual contract `f(z0) = 0 to precision P` is
//! stated for that normalized polynomial, i.e. v(f(z0)) >= V + P.

use crate::error::{Result, SeriesError};
use crate::newton::{newton_polygon, NewtonPolygon, Segment};
use crate::series::ValSeries;

/// Newton polygon of a polynomial/series in z with ValSeries coefficients,
/// from the coefficients' apparent valuations.
pub fn polygon_of(coeffs: &[ValSeries]) -> Result<NewtonPolygon> {
    let pts: Vec<(i64, Option<i64>)> = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| (i as i64, c.valuation()))
        .collect();
    newton_polygon(&pts)
}

/// Lift the zero certified by `segment` to normalized residual valuation
/// >= prec. Errors unless the segment has length 1 and integer slope.
pub fn hensel_zero_lift(coeffs: &[ValSeries], segment: &Segment, prec: usize) -> Result<ValSeries> {
    if segment.length != 1 || !segment.slope.is_integer() {
        return Err(SeriesError::NotCertifiedRational);
    }
    let comp = coeffs
        .first()
        .ok_or(SeriesError::ZeroInput)?
        .completion()
        .clone();
    let m = -segment.slope.num; // zero valuation in z
    let i0 = segment.from.0;
    let hull_min = segment.from.1 + i0 * m;

    // g(w) = f(pi^m w) / pi^V: coefficient d becomes c_d * pi^(dm - V).
    let mut g: Vec<ValSeries> = Vec::with_capacity(coeffs.len());
    let work = prec + 2;
    for (d, c) in coeffs.iter().enumerate() {
        let shifted = c.shift(d as i64 * m - hull_min);
        g.push(shifted.truncate_abs(work as i64));
    }

    // Residual linear part: alpha w^i0 + beta w^(i0+1) mod pi; all other
    // hull points sit strictly above height 0.
    let res = comp.residue_field().clone();
    let alpha = g[i0 as usize].digit(0);
    let beta = g[i0 as usize + 1].digit(0);
    if beta.is_zero() {
        return Err(SeriesError::Internal("segment endpoint lost its valuation"));
    }
    let w0 = alpha.neg().mul(&beta.inv().map_err(SeriesError::Algebra)?);
    let mut w = comp.from_residue(w0, work);
    if w.is_apparent_zero() {
        return Err(SeriesError::Internal("residual root is zero"));
    }

    let eval = |w: &ValSeries, shift_deriv: bool| -> Result<ValSeries> {
        // Horner for g and g'.
        let mut acc = comp.zero(work as i64);
        let polys: Vec<ValSeries> = if shift_deriv {
            g.iter()
                .enumerate()
                .skip(1)
                .map(|(d, c)| c.scale(&res.from_int(d as i64)))
                .collect()
        } else {
            g.clone()
        };
        for c in polys.iter().rev() {
            acc = acc.mul(w)?.add(c)?;
        }
        Ok(acc)
    };

    for _ in 0..64 {
        let f_val = eval(&w, false)?;
        if f_val.valuation().map_or(true, |v| v >= prec as i64) {
            return Ok(w.shift(m).truncate_abs(m + prec as i64));
        }
        let df_val = eval(&w, true)?;
        if df_val.valuation() != Some(0) {
            return Err(SeriesError::Internal("derivative lost its unit valuation"));
        }
        let delta = f_val.div(&df_val)?;
        w = w.sub(&delta)?;
    }
    Err(SeriesError::Internal("newton iteration failed to converge"))
}

/// Substitute z0 into the polynomial and return the valuation of the
/// residual relative to the hull minimum of z0's segment (i.e. the
/// normalized residual valuation the lift contract promises).
pub fn normalized_residual_valuation(
    coeffs: &[ValSeries],
    segment: &Segment,
    z0: &ValSeries,
) -> Result<i64> {
    let comp = coeffs[0].completion().clone();
    let m = -segment.slope.num;
    let hull_min = segment.from.1 + segment.from.0 * m;
    let mut acc = comp.zero(i64::MAX / 4);
    for c in coeffs.iter().rev() {
        acc = acc.mul(z0)?.add(c)?;
    }
    let v = acc.valuation().unwrap_or_else(|| acc.abs_prec());
    Ok(v - hull_min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Completion;
    use algebra_core::{Fq, FqPoly, Var};

    fn embed_poly_coeffs(p: u64, polys: &[&[i64]], prec: usize) -> Vec<ValSeries> {
        let f = Fq::prime(p).unwrap();
        let k = Completion::infinity(&f);
        polys
            .iter()
            .map(|c| {
                k.embed_poly(&FqPoly::from_ints(&f, Var::T, c), prec)
                    .unwrap()
            })
            .collect()
    }

    #[test]
    fn lift_constant_plus_z_over_f2() {
        // f = 1 + z over F_2((1/T)): zero z0 = 1 (the r=2, j=1 special
        // polynomial after direct summation).
        let coeffs = embed_poly_coeffs(2, &[&[1], &[1]], 30);
        let np = polygon_of(&coeffs).unwrap();
        assert_eq!(np.segments.len(), 1);
        let z0 = hensel_zero_lift(&coeffs, &np.segments[0], 25).unwrap();
        let k = coeffs[0].completion().clone();
        assert!(z0.agrees_to(&k.one(25), 25));
        assert!(normalized_residual_valuation(&coeffs, &np.segments[0], &z0).unwrap() >= 25);
    }

    #[test]
    fn lift_geometric_zero_at_pi() {
        // f = 1 - z/pi: zero z0 = pi. Coefficients: c0 = 1, c1 = -T.
        let f5 = Fq::prime(5).unwrap();
        let k = Completion::infinity(&f5);
        let c0 = k.one(20);
        let c1 = k
            .embed_poly(&FqPoly::from_ints(&f5, Var::T, &[0, -1]), 20)
            .unwrap();
        let coeffs = vec![c0, c1];
        let np = polygon_of(&coeffs).unwrap();
        assert_eq!(np.segments[0].slope.num, -1);
        let z0 = hensel_zero_lift(&coeffs, &np.segments[0], 18).unwrap();
        assert_eq!(z0.valuation(), Some(1));
        assert!(z0.agrees_to(&k.uniformizer_pow(1, 18), 12));
    }

    #[test]
    fn length_two_segment_refused() {
        // f = 1 + z^2/pi^2 has a single length-2 segment.
        let f3 = Fq::prime(3).unwrap();
        let k = Completion::infinity(&f3);
        let c0 = k.one(12);
        let c2 = k
            .embed_poly(&FqPoly::from_ints(&f3, Var::T, &[0, 0, 1]), 12)
            .unwrap();
        let coeffs = vec![c0, k.zero(12), c2];
        let np = polygon_of(&coeffs).unwrap();
        assert_eq!(np.segments[0].length, 2);
        assert_eq!(
            hensel_zero_lift(&coeffs, &np.segments[0], 8).unwrap_err(),
            SeriesError::NotCertifiedRational
        );
    }

    #[test]
    fn lift_quadratic_with_distinct_valuations() {
        // f = (1 - z T)(1 - z T^3) = 1 - (T + T^3) z + T^4 z^2.
        // Zeros 1/T and 1/T^3, valuations 1 and 3.
        let coeffs = embed_poly_coeffs(5, &[&[1], &[0, -1, 0, -1], &[0, 0, 0, 0, 1]], 30);
        let np = polygon_of(&coeffs).unwrap();
        assert!(np.all_length_one_integer_slopes());
        let k = coeffs[0].completion().clone();
        let t_inv = k.uniformizer_pow(1, 25);
        let t3_inv = k.uniformizer_pow(3, 25);
        let z0 = hensel_zero_lift(&coeffs, &np.segments[0], 20).unwrap();
        let z1 = hensel_zero_lift(&coeffs, &np.segments[1], 20).unwrap();
        // Residuals vanish to the promised normalized precision.
        assert!(normalized_residual_valuation(&coeffs, &np.segments[0], &z0).unwrap() >= 20);
        assert!(normalized_residual_valuation(&coeffs, &np.segments[1], &z1).unwrap() >= 20);
        assert_eq!(z0.valuation(), Some(3).min(z0.valuation()));
        // The two zeros are 1/T^3 and 1/T in some order by slope.
        let (lo, hi) = if z0.valuation() == Some(1) {
            (z0, z1)
        } else {
            (z1, z0)
        };
        assert!(lo.agrees_to(&t_inv, 15));
        assert!(hi.agrees_to(&t3_inv, 15));
    }
}
