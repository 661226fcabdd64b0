//! Exact square testing in F_q(T) for odd q: a nonzero polynomial is a
//! square iff its leading coefficient is a square in F_q and its monic
//! part has an exact polynomial square root, found by a truncated
//! power-series Newton iteration and verified by squaring back.

use crate::error::{GaloisError, Result};
use algebra_core::FqPoly;
#[cfg(test)]
use algebra_core::Var;

/// Truncated series inverse of f (constant term must be a unit): returns g
/// with f*g = 1 mod x^prec, by Newton doubling.
fn series_inv(f: &FqPoly, prec: usize) -> Result<FqPoly> {
    let field = f.field().clone();
    let c0 = f.coeff(0);
    if c0.is_zero() {
        return Err(GaloisError::ZeroInput);
    }
    let mut g = FqPoly::constant(&field, f.var(), c0.inv()?);
    let mut k = 1usize;
    let two = FqPoly::from_ints(&field, f.var(), &[2]);
    while k < prec {
        k = (2 * k).min(prec);
        // g <- g(2 - f g) mod x^k
        let fg = truncate(&f.clone(), k).mul(&g);
        let corr = two.sub(&truncate(&fg, k));
        g = truncate(&g.mul(&corr), k);
    }
    Ok(g)
}

fn truncate(f: &FqPoly, k: usize) -> FqPoly {
    if f.coeffs().len() <= k {
        return f.clone();
    }
    FqPoly::new(f.field(), f.var(), f.coeffs()[..k].to_vec())
}

/// Truncated series square root of f with f(0) = 1, odd characteristic:
/// Newton iteration s <- (s + f/s)/2.
fn series_sqrt(f: &FqPoly, prec: usize) -> Result<FqPoly> {
    let field = f.field().clone();
    if field.p() == 2 {
        return Err(GaloisError::EvenCharacteristic);
    }
    if !f.coeff(0).is_one() {
        return Err(GaloisError::ZeroInput);
    }
    let half = field.from_int(2).inv()?;
    let mut s = FqPoly::one(&field, f.var());
    let mut k = 1usize;
    while k < prec {
        k = (2 * k).min(prec);
        let s_inv = series_inv(&s, k)?;
        let fs = truncate(&truncate(f, k).mul(&s_inv), k);
        s = truncate(&s.add(&fs).scale(&half), k);
    }
    Ok(s)
}

/// True iff d is a square in F_q(T) (equivalently in F_q[T] for d in A):
/// even degree, square leading coefficient, and an exact square root of
/// the monic part.
pub fn disc_is_square(d: &FqPoly) -> Result<bool> {
    let field = d.field().clone();
    if field.p() == 2 {
        return Err(GaloisError::EvenCharacteristic);
    }
    let n = match d.degree() {
        None => return Err(GaloisError::ZeroInput),
        Some(n) => n,
    };
    if n % 2 != 0 {
        return Ok(false);
    }
    // Leading coefficient must be a square in F_q*: c^((q-1)/2) = 1.
    let lc = d.leading_coeff().unwrap().clone();
    if !lc.pow((field.order() - 1) / 2).is_one() {
        return Ok(false);
    }
    if n == 0 {
        return Ok(true);
    }
    // Strip the T-power (its exponent must be even), reverse the monic
    // part so the constant term is 1, take the series square root to
    // length (n - val)/2 + 1, reverse back and verify exactly.
    let monic = d.clone().into_monic();
    let val = monic
        .coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero");
    if val % 2 != 0 {
        return Ok(false);
    }
    let shifted = FqPoly::new(&field, monic.var(), monic.coeffs()[val..].to_vec());
    let rev = shifted.reciprocal();
    debug_assert!(rev.coeff(0).is_one());
    let half_deg = (n - val) / 2;
    let s = series_sqrt(&rev, half_deg + 1)?;
    let candidate_rev = truncate(&s, half_deg + 1);
    // Reverse back to a polynomial of degree half_deg.
    let mut cand_coeffs = candidate_rev.coeffs().to_vec();
    cand_coeffs.resize(half_deg + 1, field.zero());
    cand_coeffs.reverse();
    let cand = FqPoly::new(&field, monic.var(), cand_coeffs);
    Ok(cand.mul(&cand) == shifted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use algebra_core::Fq;

    #[test]
    fn basic_squares() {
        let f5 = Fq::prime(5).unwrap();
        let t = FqPoly::gen(&f5, Var::T);
        assert!(disc_is_square(&t.mul(&t)).unwrap());
        assert!(!disc_is_square(&t).unwrap());
        // 2T^2: 2 is a non-residue mod 5 (2^2 = 4 != 1).
        let two_t2 = t.mul(&t).scale(&f5.from_int(2));
        assert!(!disc_is_square(&two_t2).unwrap());
        // 4T^2 = (2T)^2 is a square.
        let four_t2 = t.mul(&t).scale(&f5.from_int(4));
        assert!(disc_is_square(&four_t2).unwrap());
    }

    #[test]
    fn random_squares_and_near_squares() {
        for p in [3u64, 5] {
            let field = Fq::prime(p).unwrap();
            let mut rng = algebra_core::DetRng::new(p * 13);
            for _ in 0..60 {
                let d = 1 + rng.next_below(6) as usize;
                let mut coeffs: Vec<i64> =
                    (0..d).map(|_| rng.next_below(p) as i64).collect();
                coeffs.push(1 + rng.next_below(p - 1) as i64);
                let g = FqPoly::from_ints(&field, Var::T, &coeffs);
                let sq = g.mul(&g);
                assert!(disc_is_square(&sq).unwrap(), "g^2 with g={g}");
                // g^2 * T is not a square (odd T-valuation or odd degree).
                let t = FqPoly::gen(&field, Var::T);
                assert!(!disc_is_square(&sq.mul(&t)).unwrap());
                // Non-residue scaling breaks squareness.
                let mut nr = 0;
                for c in 2..p {
                    if !field.from_int(c as i64).pow((p - 1) / 2).is_one() {
                        nr = c;
                        break;
                    }
                }
                if nr != 0 {
                    let scaled = sq.scale(&field.from_int(nr as i64));
                    assert!(!disc_is_square(&scaled).unwrap());
                }
            }
        }
    }

    #[test]
    fn high_degree_square() {
        // Exercise the Newton path at the Roberts scale.
        let f5 = Fq::prime(5).unwrap();
        let mut rng = algebra_core::DetRng::new(4242);
        let coeffs: Vec<i64> = (0..7000)
            .map(|_| rng.next_below(5) as i64)
            .chain([1])
            .collect();
        let g = FqPoly::from_ints(&f5, Var::T, &coeffs);
        let sq = g.mul(&g);
        assert!(disc_is_square(&sq).unwrap());
        let t = FqPoly::gen(&f5, Var::T);
        assert!(!disc_is_square(&sq.mul(&t).mul(&t).scale(&f5.from_int(2))).unwrap());
    }

    #[test]
    fn char2_refused() {
        let f2 = Fq::prime(2).unwrap();
        let t = FqPoly::gen(&f2, Var::T);
        assert!(matches!(
            disc_is_square(&t),
            Err(GaloisError::EvenCharacteristic)
        ));
    }
}
