//! Wan's degree-one identity: for v = (T) and positive j divisible by
//! q - 1, mapping the v-adic special polynomial through T -> 1/T and
//! multiplying by (1 - x^(-1))^(-1) reproduces zeta_A(x, -j), whose
//! x^(-d) coefficient is T^(-dj) S_d(j). Both sides are computed
//! independently and compared coefficient-by-coefficient.

use crate::error::{Result, ZetaError};
use crate::powersum::power_sum;
use crate::special::vadic_zeta_poly;
use algebra_core::{Fq, FqPoly, Var};
use local_series::{Completion, ValSeries};

#[derive(Clone, Debug)]
pub struct WanReport {
    pub equal: bool,
    pub compared_degrees: usize,
    pub mismatched_d: Vec<usize>,
    pub prec: usize,
}

/// Map c(T) to c(1/T) in K = F_q((1/T)), exactly.
fn map_t_to_inv_t(c: &FqPoly, comp: &Completion, prec: usize) -> ValSeries {
    // c = sum c_k T^k becomes sum c_k pi^k: digits are c's coefficients.
    let coeffs = c.coeffs().to_vec();
    let mut padded = coeffs;
    padded.resize(padded.len().max(prec), c.field().zero());
    ValSeries::new(comp.clone(), 0, padded)
}

pub fn wan_identity_check(field: &Fq, j: u64, prec: usize) -> Result<WanReport> {
    let q = field.order();
    if j == 0 || j % (q - 1) != 0 {
        return Err(ZetaError::BadTrivialZeroParameter(j));
    }
    let comp = Completion::infinity(field);
    let v = FqPoly::gen(field, Var::T);
    let vadic = vadic_zeta_poly(&v, j)?;
    // Left side: cumulative sums of the mapped coefficients give the
    // product with the geometric series (1 - x^(-1))^(-1).
    let compare_to = vadic.degree() + 4;
    let mut lhs = Vec::with_capacity(compare_to + 1);
    let mut running = comp.zero(prec as i64);
    for d in 0..=compare_to {
        let mapped = map_t_to_inv_t(&vadic.coeff(d), &comp, prec);
        running = running.add(&mapped)?.truncate_abs(prec as i64);
        lhs.push(running.clone());
    }
    // Right side: T^(-dj) S_d(j).
    let mut mismatched = Vec::new();
    for (d, left) in lhs.iter().enumerate() {
        let s = power_sum(field, Var::T, d, j);
        let right = comp
            .embed_poly(&s, prec)?
            .shift((d as u64 * j) as i64)
            .truncate_abs(prec as i64);
        let p = left.abs_prec().min(right.abs_prec()).min(prec as i64);
        if !left.agrees_to(&right, p) {
            mismatched.push(d);
        }
    }
    Ok(WanReport {
        equal: mismatched.is_empty(),
        compared_degrees: compare_to + 1,
        mismatched_d: mismatched,
        prec,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wan_small_cases() {
        for (p, j) in [(2u64, 1u64), (2, 2), (3, 2), (3, 4), (5, 4)] {
            let field = Fq::prime(p).unwrap();
            let rep = wan_identity_check(&field, j, 40).unwrap();
            assert!(rep.equal, "p={p} j={j}: mismatch at {:?}", rep.mismatched_d);
        }
    }

    #[test]
    fn wan_rejects_bad_j() {
        let f3 = Fq::prime(3).unwrap();
        assert!(wan_identity_check(&f3, 3, 20).is_err());
        assert!(wan_identity_check(&f3, 0, 20).is_err());
    }

    #[test]
    fn wan_would_detect_corruption() {
        // Sanity that the comparison has teeth: shifting j on one side
        // must break equality.
        let f3 = Fq::prime(3).unwrap();
        let comp = Completion::infinity(&f3);
        let v = FqPoly::gen(&f3, Var::T);
        let vadic = vadic_zeta_poly(&v, 2).unwrap();
        let mut running = comp.zero(30);
        let mut all_equal = true;
        for d in 0..=vadic.degree() + 2 {
            let mapped = map_t_to_inv_t(&vadic.coeff(d), &comp, 30);
            running = running.add(&mapped).unwrap();
            let s = power_sum(&f3, Var::T, d, 4); // wrong j on purpose
            let right = comp
                .embed_poly(&s, 30)
                .unwrap()
                .shift((d as u64) as i64 * 4);
            let p = running.abs_prec().min(right.abs_prec()).min(30);
            if !running.agrees_to(&right, p) {
                all_equal = false;
            }
        }
        assert!(!all_equal);
    }
}
