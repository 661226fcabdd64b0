//! Zero-field analysis: Newton polygon of a special polynomial or series
//! row, extraction of the base-rational zeros, and the K-rationality /
//! simplicity flags.
//!
//! Series are in z = x^(-1); a zero z0 corresponds to a zero x = 1/z0 of
//! the original function, so a segment of slope s certifies zeros of
//! valuation -s in z. A segment is certified only when every coefficient's
//! precision strictly exceeds the hull height at its index; otherwise the
//! report says so rather than guessing.

use crate::error::{Result, ZetaError};
use crate::special::ZetaPoly;
use local_series::{
    hensel_zero_lift, normalized_residual_valuation, polygon_of, Completion, NewtonPolygon,
    Ratio, ValSeries,
};

#[derive(Clone, Debug)]
pub struct ZeroRecord {
    pub slope: Ratio,
    pub length: i64,
    pub simple: bool,
    pub k_rational: bool,
    /// The lifted zero (in z = x^(-1)) when certified K-rational.
    pub zero: Option<ValSeries>,
    /// Normalized residual valuation of the lifted zero.
    pub residual_valuation: Option<i64>,
}

#[derive(Clone, Debug)]
pub struct ZeroFieldReport {
    pub parameter: String,
    pub polygon: NewtonPolygon,
    pub zeros: Vec<ZeroRecord>,
    pub all_in_k: bool,
    pub all_simple: bool,
    /// False when some coefficient's precision does not clear the hull.
    pub certified: bool,
    /// No zeros at all (constant function): Z = K by convention.
    pub constant: bool,
}

/// Analyze a polynomial/series in z given by its ValSeries coefficients.
/// `lift_prec` is the normalized residual precision demanded of each
/// certified zero.
pub fn zero_field_analysis(
    coeffs: &[ValSeries],
    parameter: &str,
    lift_prec: usize,
) -> Result<ZeroFieldReport> {
    if coeffs.is_empty() || coeffs[0].valuation() != Some(0) || !coeffs[0].digit(0).is_one() {
        return Err(ZetaError::NotNormalized);
    }
    let np = polygon_of(coeffs)?;
    // Certification: apparent-zero coefficients must have precision above
    // the hull; nonzero coefficients have exact valuations by construction.
    let mut certified = true;
    for (i, c) in coeffs.iter().enumerate() {
        if c.valuation().is_none() {
            if let Some(h) = np.hull_value_at(i as i64) {
                if c.abs_prec() <= h {
                    certified = false;
                }
            }
        }
    }
    let mut zeros = Vec::new();
    for seg in &np.segments {
        let liftable = certified && seg.length == 1 && seg.slope.is_integer();
        let (zero, residual) = if liftable {
            let z0 = hensel_zero_lift(coeffs, seg, lift_prec)?;
            let rv = normalized_residual_valuation(coeffs, seg, &z0)?;
            (Some(z0), Some(rv))
        } else {
            (None, None)
        };
        zeros.push(ZeroRecord {
            slope: seg.slope,
            length: seg.length,
            simple: seg.length == 1,
            k_rational: liftable,
            zero,
            residual_valuation: residual,
        });
    }
    let constant = np.segments.is_empty();
    let all_simple = zeros.iter().all(|z| z.simple);
    let all_in_k = certified && zeros.iter().all(|z| z.k_rational);
    Ok(ZeroFieldReport {
        parameter: parameter.into(),
        polygon: np,
        zeros,
        all_in_k,
        all_simple,
        certified,
        constant,
    })
}

/// Embed a ZetaPoly (exact A coefficients) for analysis. Valuations at the
/// infinite place are minus the coefficient degrees, exactly.
pub fn zeta_poly_series(z: &ZetaPoly, prec: usize) -> Result<Vec<ValSeries>> {
    let comp = Completion::infinity(z.field());
    let mut out = Vec::with_capacity(z.coeffs().len());
    for c in z.coeffs() {
        out.push(comp.embed_poly(c, prec)?);
    }
    Ok(out)
}

/// Convenience: analyze a special polynomial directly.
pub fn analyze_zeta_poly(z: &ZetaPoly, lift_prec: usize) -> Result<ZeroFieldReport> {
    let series = zeta_poly_series(z, lift_prec + 8)?;
    let label = format!(
        "{}j={}{}",
        if z.is_tilde() { "tilde " } else { "" },
        z.j(),
        ""
    );
    zero_field_analysis(&series, &label, lift_prec)
}

/// Valuations (in z) of the certified zeros, i.e. minus the slopes.
pub fn zero_valuations(report: &ZeroFieldReport) -> Vec<i64> {
    report
        .zeros
        .iter()
        .filter(|z| z.slope.is_integer())
        .map(|z| -z.slope.num)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::{remove_trivial_zero, zeta_special_poly};
    use algebra_core::Fq;

    #[test]
    fn constant_reports_k_by_convention() {
        // r = 2, j = 1 after trivial-zero removal is the constant 1.
        let f2 = Fq::prime(2).unwrap();
        let z = remove_trivial_zero(&zeta_special_poly(&f2, 1)).unwrap();
        let rep = analyze_zeta_poly(&z, 20).unwrap();
        assert!(rep.constant);
        assert!(rep.all_in_k && rep.all_simple);
        assert!(rep.zeros.is_empty());
    }

    #[test]
    fn row_at_y_zero_constant() {
        let f3 = Fq::prime(3).unwrap();
        let row =
            crate::row::zeta_series_row(&f3, &local_series::PadicInt::exact(3, 0), 3, 12, None)
                .unwrap();
        let rep = zero_field_analysis(&row.coeffs, "y=0", 8).unwrap();
        assert!(rep.constant);
    }

    #[test]
    fn small_tilde_polys_all_simple_rational() {
        for (p, jmax) in [(2u64, 24u64), (3, 24), (5, 16)] {
            let field = Fq::prime(p).unwrap();
            for j in 1..=jmax {
                let z = remove_trivial_zero(&zeta_special_poly(&field, j)).unwrap();
                let rep = analyze_zeta_poly(&z, 20).unwrap();
                assert!(rep.certified);
                assert!(rep.all_simple, "p={p} j={j}");
                assert!(rep.all_in_k, "p={p} j={j}");
                for zr in &rep.zeros {
                    assert!(zr.residual_valuation.unwrap() >= 20, "p={p} j={j}");
                }
            }
        }
    }

    #[test]
    fn zero_valuation_convention() {
        // Slopes are negative; zero valuations in z are their negatives.
        let f5 = Fq::prime(5).unwrap();
        let z = remove_trivial_zero(&zeta_special_poly(&f5, 8)).unwrap();
        let rep = analyze_zeta_poly(&z, 16).unwrap();
        for (zr, val) in rep.zeros.iter().zip(zero_valuations(&rep)) {
            assert_eq!(zr.zero.as_ref().unwrap().valuation(), Some(val));
        }
    }
}
