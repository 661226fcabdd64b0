//! The Carlitz arithmetic sequences: brackets [i] = theta^(q^i) - theta,
//! the products D_i = [i] D_(i-1)^q and L_i = [i] L_(i-1), the digit
//! factorial, and the Bernoulli-Carlitz numbers from z/e(z).

use crate::error::{CarlitzError, Result};
use algebra_core::{Fq, FqPoly, RatFn, Var};

/// [i] = T^(q^i) - T (in the scalar copy; i >= 1).
pub fn bracket(field: &Fq, i: usize) -> FqPoly {
    let q = field.order();
    let e = q.checked_pow(i as u32).expect("q^i overflow");
    let t = FqPoly::gen(field, Var::T);
    FqPoly::monomial(field, Var::T, field.one(), e as usize).sub(&t)
}

/// D_0 = 1, D_i = [i] D_(i-1)^q.
pub fn d_sequence(field: &Fq, upto: usize) -> Vec<FqPoly> {
    let q = field.order();
    let mut out = vec![FqPoly::one(field, Var::T)];
    for i in 1..=upto {
        let prev_q = out[i - 1].pow_charp(q);
        out.push(bracket(field, i).mul(&prev_q));
    }
    out
}

/// L_0 = 1, L_i = [i] L_(i-1).
pub fn l_sequence(field: &Fq, upto: usize) -> Vec<FqPoly> {
    let mut out = vec![FqPoly::one(field, Var::T)];
    for i in 1..=upto {
        out.push(bracket(field, i).mul(&out[i - 1]));
    }
    out
}

/// The Carlitz factorial by base-q digits: Pi(i) = prod D_k^(c_k).
pub fn carlitz_factorial(field: &Fq, i: u64) -> FqPoly {
    let q = field.order();
    let mut digits = Vec::new();
    let mut rest = i;
    while rest > 0 {
        digits.push((rest % q) as usize);
        rest /= q;
    }
    let d = d_sequence(field, digits.len().saturating_sub(1));
    let mut acc = FqPoly::one(field, Var::T);
    for (k, &c) in digits.iter().enumerate() {
        for _ in 0..c {
            acc = acc.mul(&d[k]);
        }
    }
    acc
}

/// BC_i from z/e(z) = sum BC_i / Pi(i) z^i: series inversion of e(z)/z,
/// which has terms z^(q^j - 1)/D_j only. `prec` must exceed i.
pub fn bernoulli_carlitz(field: &Fq, i: u64, prec: usize) -> Result<RatFn> {
    if (prec as u64) < i + 1 {
        return Err(CarlitzError::InsufficientPrecision {
            needed: i as usize + 1,
        });
    }
    let q = field.order();
    // e(z)/z as a z-polynomial with RatFn coefficients through degree prec-1.
    let mut f = vec![RatFn::zero(field, Var::T); prec];
    f[0] = RatFn::one(field, Var::T);
    let mut j = 1usize;
    let d = d_sequence(field, 32.min(prec));
    loop {
        let e = match (q as u128).checked_pow(j as u32) {
            Some(e) if e - 1 < prec as u128 => (e - 1) as usize,
            _ => break,
        };
        f[e] = RatFn::new(FqPoly::one(field, Var::T), d[j].clone())
            .map_err(CarlitzError::Algebra)?;
        j += 1;
    }
    // Invert the unit series: g with f g = 1.
    let mut g = vec![RatFn::zero(field, Var::T); prec];
    g[0] = RatFn::one(field, Var::T);
    for k in 1..prec {
        let mut acc = RatFn::zero(field, Var::T);
        for e in 1..=k {
            if !f[e].is_zero() {
                acc = acc.add(&f[e].mul(&g[k - e]));
            }
        }
        g[k] = acc.neg();
    }
    let pi_i = carlitz_factorial(field, i);
    Ok(g[i as usize].mul(&RatFn::from_poly(pi_i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d_degrees_and_divisibility() {
        // deg D_i = i q^i; D_i | Pi(j) whenever digit i of j is nonzero.
        for p in [2u64, 3, 5] {
            let field = Fq::prime(p).unwrap();
            let d = d_sequence(&field, 3);
            for (i, di) in d.iter().enumerate() {
                let expect = i as u64 * p.pow(i as u32);
                assert_eq!(di.degree().unwrap() as u64, expect, "p={p} i={i}");
            }
            // j with digits (1, 0, 1): j = 1 + q^2.
            let j = 1 + p * p;
            let pi = carlitz_factorial(&field, j);
            assert!(pi.divides_exactly(&d[0]));
            assert!(pi.divides_exactly(&d[2]));
        }
    }

    #[test]
    fn factorial_small_values() {
        let f3 = Fq::prime(3).unwrap();
        assert!(carlitz_factorial(&f3, 0).is_one());
        assert!(carlitz_factorial(&f3, 1).is_one()); // D_0 = 1
        // Pi(q) = D_1 = T^q - T.
        let d1 = bracket(&f3, 1);
        assert_eq!(carlitz_factorial(&f3, 3), d1);
    }

    #[test]
    fn bernoulli_carlitz_small() {
        for p in [3u64, 5] {
            let field = Fq::prime(p).unwrap();
            // BC_0 = 1, BC_i = 0 for 0 < i < q - 1, BC_(q-1) = -1/D_1.
            assert!(bernoulli_carlitz(&field, 0, 16).unwrap().is_one());
            for i in 1..p - 1 {
                assert!(bernoulli_carlitz(&field, i, 16).unwrap().is_zero());
            }
            let bc = bernoulli_carlitz(&field, p - 1, 16).unwrap();
            let d1 = bracket(&field, 1);
            let expect = RatFn::new(
                FqPoly::from_ints(&field, Var::T, &[-1]),
                d1,
            )
            .unwrap();
            assert_eq!(bc, expect, "p={p}");
        }
    }

    #[test]
    fn insufficient_precision_reported() {
        let f3 = Fq::prime(3).unwrap();
        match bernoulli_carlitz(&f3, 10, 5) {
            Err(CarlitzError::InsufficientPrecision { needed }) => assert_eq!(needed, 11),
            other => panic!("expected precision error, got {other:?}"),
        }
    }

    #[test]
    fn bc_match_exp_inversion_identity() {
        // z/e(z) * e(z)/z = 1: spot-check the inversion at a larger index.
        let f3 = Fq::prime(3).unwrap();
        let bc8 = bernoulli_carlitz(&f3, 8, 20).unwrap();
        // 8 = 2 + 2*3: Pi(8) = D_0^2 D_1^2 = D_1^2.
        let d1 = bracket(&f3, 1);
        let pi8 = carlitz_factorial(&f3, 8);
        assert_eq!(pi8, d1.mul(&d1));
        // The value itself: the inversion of 1 + z^2/D_1 + z^8/D_2 at z^8:
        // coefficient is D_1^-4 - D_2^-1 (from (z^2/D_1)^4 and z^8/D_2).
        let d2 = bracket(&f3, 2).mul(&d1.pow_charp(3));
        let expect = RatFn::new(FqPoly::one(&f3, Var::T), d1.pow_charp(4))
            .unwrap()
            .sub(&RatFn::new(FqPoly::one(&f3, Var::T), d2).unwrap())
            .mul(&RatFn::from_poly(pi8));
        assert_eq!(bc8, expect);
    }
}
