//! Polynomials in x with coefficients in A = F_q[T]: the carrier for the
//! special polynomials viewed in x, with the quartic/cubic toolbox
//! (depression, resolvent cubic, closed discriminant formulas).

use crate::error::{GaloisError, Result};
use algebra_core::{Fq, FqPoly, Var};
use std::fmt;

/// Dense polynomial in x over A, ascending x-degree, trailing-zero free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XPolyOverA {
    field: Fq,
    coeffs: Vec<FqPoly>,
}

impl XPolyOverA {
    pub fn new(field: &Fq, mut coeffs: Vec<FqPoly>) -> XPolyOverA {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        XPolyOverA {
            field: field.clone(),
            coeffs,
        }
    }

    /// From the coefficients of a polynomial in x^(-1) with constant term
    /// c_0: the reciprocal x^deg * z(1/x), ascending in x.
    pub fn from_xinv_coeffs(field: &Fq, coeffs: &[FqPoly]) -> XPolyOverA {
        let rev: Vec<FqPoly> = coeffs.iter().rev().cloned().collect();
        XPolyOverA::new(field, rev)
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn coeffs(&self) -> &[FqPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FqPoly {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| FqPoly::zero(&self.field, Var::T))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    /// Content: monic gcd of the coefficients.
    pub fn content(&self) -> Result<FqPoly> {
        let mut g = FqPoly::zero(&self.field, Var::T);
        for c in &self.coeffs {
            if g.is_zero() {
                g = c.clone().into_monic();
            } else if !c.is_zero() {
                g = g.gcd(c)?;
            }
            if g.is_one() {
                break;
            }
        }
        if g.is_zero() {
            return Err(GaloisError::ZeroInput);
        }
        Ok(g)
    }

    pub fn primitive_part(&self) -> Result<XPolyOverA> {
        let c = self.content()?;
        if c.is_one() {
            return Ok(self.clone());
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|x| Ok(x.divrem(&c)?.0))
            .collect::<Result<Vec<_>>>()?;
        Ok(XPolyOverA::new(&self.field, coeffs))
    }

    pub fn add(&self, other: &XPolyOverA) -> XPolyOverA {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        XPolyOverA::new(&self.field, coeffs)
    }

    pub fn sub(&self, other: &XPolyOverA) -> XPolyOverA {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect();
        XPolyOverA::new(&self.field, coeffs)
    }

    pub fn mul(&self, other: &XPolyOverA) -> XPolyOverA {
        if self.is_zero() || other.is_zero() {
            return XPolyOverA::new(&self.field, vec![]);
        }
        let mut coeffs =
            vec![FqPoly::zero(&self.field, Var::T); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        XPolyOverA::new(&self.field, coeffs)
    }

    /// Division by a monic divisor in A[x]; remainder stays in A[x].
    pub fn divrem_monic(&self, den: &XPolyOverA) -> Result<(XPolyOverA, XPolyOverA)> {
        if !den.is_monic() {
            return Err(GaloisError::NotMonic);
        }
        let dd = den.degree().unwrap();
        if self.degree().map_or(true, |d| d < dd) {
            return Ok((XPolyOverA::new(&self.field, vec![]), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![FqPoly::zero(&self.field, Var::T); rem.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let c = rem[k].clone();
            if !c.is_zero() {
                let shift = k - dd;
                quot[shift] = c.clone();
                for (i, dc) in den.coeffs.iter().enumerate() {
                    rem[shift + i] = rem[shift + i].sub(&dc.mul(&c));
                }
            }
            rem.pop();
        }
        Ok((
            XPolyOverA::new(&self.field, quot),
            XPolyOverA::new(&self.field, rem),
        ))
    }

    /// Evaluate the T-coefficients at a scalar multiple: substitute x with
    /// the monomial c*x... — not needed; kept out intentionally.
    ///
    /// Scale every coefficient by a field constant.
    pub fn scale_const(&self, c: i64) -> XPolyOverA {
        let s = self.field.from_int(c);
        XPolyOverA::new(
            &self.field,
            self.coeffs.iter().map(|x| x.scale(&s)).collect(),
        )
    }
}

impl fmt::Display for XPolyOverA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({})", c)?,
                _ => write!(f, "({})*x^{}", c, i)?,
            }
        }
        Ok(())
    }
}

/// The depressed form (p, q, s) of a monic quartic x^4+a3 x^3+a2 x^2+a1 x+a0
/// under x -> x - a3/4. Refused in characteristic 2.
pub fn depress_quartic(f: &XPolyOverA) -> Result<(FqPoly, FqPoly, FqPoly)> {
    if f.field().p() == 2 {
        return Err(GaloisError::EvenCharacteristic);
    }
    if f.degree() != Some(4) || !f.is_monic() {
        return Err(GaloisError::NotMonicQuartic);
    }
    let field = f.field().clone();
    let inv = |n: i64| field.from_int(n).inv().expect("odd characteristic");
    let a3 = f.coeff(3);
    let a2 = f.coeff(2);
    let a1 = f.coeff(1);
    let a0 = f.coeff(0);
    let a3_sq = a3.mul(&a3);
    // p = a2 - 3 a3^2/8
    let p = a2.sub(&a3_sq.scale(&field.from_int(3).mul(&inv(8))));
    // q = a1 - a2 a3/2 + a3^3/8
    let q = a1
        .sub(&a2.mul(&a3).scale(&inv(2)))
        .add(&a3_sq.mul(&a3).scale(&inv(8)));
    // s = a0 - a1 a3/4 + a2 a3^2/16 - 3 a3^4/256
    let s = a0
        .sub(&a1.mul(&a3).scale(&inv(4)))
        .add(&a2.mul(&a3_sq).scale(&inv(16)))
        .sub(&a3_sq.mul(&a3_sq).scale(&field.from_int(3).mul(&inv(256))));
    Ok((p, q, s))
}

/// Resolvent cubic of a monic quartic: after depression to x^4+px^2+qx+s,
/// the cubic y^3 - p y^2 - 4 s y + (4 p s - q^2). Its discriminant equals
/// the quartic's.
pub fn resolvent_cubic(f: &XPolyOverA) -> Result<XPolyOverA> {
    let (p, q, s) = depress_quartic(f)?;
    let field = f.field().clone();
    let four = field.from_int(4);
    let c0 = p.mul(&s).scale(&four).sub(&q.mul(&q));
    let c1 = s.scale(&four).neg();
    let c2 = p.neg();
    Ok(XPolyOverA::new(
        &field,
        vec![c0, c1, c2, FqPoly::one(&field, Var::T)],
    ))
}

/// disc(x^4 + p x^2 + q x + s) =
/// 16 p^4 s - 4 p^3 q^2 - 128 p^2 s^2 + 144 p q^2 s - 27 q^4 + 256 s^3.
pub fn quartic_discriminant(f: &XPolyOverA) -> Result<FqPoly> {
    let (p, q, s) = depress_quartic(f)?;
    let field = f.field().clone();
    let c = |n: i64| field.from_int(n);
    let p2 = p.mul(&p);
    let q2 = q.mul(&q);
    let s2 = s.mul(&s);
    let term1 = p2.mul(&p2).mul(&s).scale(&c(16));
    let term2 = p2.mul(&p).mul(&q2).scale(&c(-4));
    let term3 = p2.mul(&s2).scale(&c(-128));
    let term4 = p.mul(&q2).mul(&s).scale(&c(144));
    let term5 = q2.mul(&q2).scale(&c(-27));
    let term6 = s2.mul(&s).scale(&c(256));
    Ok(term1
        .add(&term2)
        .add(&term3)
        .add(&term4)
        .add(&term5)
        .add(&term6))
}

/// disc(x^3 + b x^2 + c x + e) = 18bce - 4b^3 e + b^2 c^2 - 4c^3 - 27e^2.
pub fn cubic_discriminant(f: &XPolyOverA) -> Result<FqPoly> {
    if f.degree() != Some(3) || !f.is_monic() {
        return Err(GaloisError::NotMonicCubic);
    }
    let field = f.field().clone();
    let k = |n: i64| field.from_int(n);
    let b = f.coeff(2);
    let c = f.coeff(1);
    let e = f.coeff(0);
    let t1 = b.mul(&c).mul(&e).scale(&k(18));
    let t2 = b.mul(&b).mul(&b).mul(&e).scale(&k(-4));
    let t3 = b.mul(&b).mul(&c).mul(&c);
    let t4 = c.mul(&c).mul(&c).scale(&k(-4));
    let t5 = e.mul(&e).scale(&k(-27));
    Ok(t1.add(&t2).add(&t3).add(&t4).add(&t5))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Fq {
        Fq::prime(5).unwrap()
    }

    fn t_poly(field: &Fq, c: &[i64]) -> FqPoly {
        FqPoly::from_ints(field, Var::T, c)
    }

    #[test]
    fn resolvent_formula_instances() {
        let field = f5();
        let one = FqPoly::one(&field, Var::T);
        let zero = FqPoly::zero(&field, Var::T);
        // x^4 + q x -> y^3 - q^2 with q = T.
        let q = t_poly(&field, &[0, 1]);
        let f = XPolyOverA::new(
            &field,
            vec![zero.clone(), q.clone(), zero.clone(), zero.clone(), one.clone()],
        );
        let r = resolvent_cubic(&f).unwrap();
        assert_eq!(r.coeff(0), q.mul(&q).neg());
        assert!(r.coeff(1).is_zero());
        assert!(r.coeff(2).is_zero());
        // x^4 + p x^2 -> y^3 - p y^2 with p = T + 1.
        let p = t_poly(&field, &[1, 1]);
        let f = XPolyOverA::new(
            &field,
            vec![zero.clone(), zero.clone(), p.clone(), zero.clone(), one],
        );
        let r = resolvent_cubic(&f).unwrap();
        assert!(r.coeff(0).is_zero());
        assert!(r.coeff(1).is_zero());
        assert_eq!(r.coeff(2), p.neg());
    }

    #[test]
    fn resolvent_preserves_discriminant() {
        // Random monic quartics over F_5(T) and F_3(T).
        for p in [3u64, 5] {
            let field = Fq::prime(p).unwrap();
            let mut rng = algebra_core::DetRng::new(p + 40);
            for _ in 0..100 {
                let mut coeffs: Vec<FqPoly> = (0..4)
                    .map(|_| {
                        let d = rng.next_below(3) as usize;
                        let c: Vec<i64> =
                            (0..=d).map(|_| rng.next_below(p) as i64).collect();
                        FqPoly::from_ints(&field, Var::T, &c)
                    })
                    .collect();
                coeffs.push(FqPoly::one(&field, Var::T));
                let f = XPolyOverA::new(&field, coeffs);
                if f.degree() != Some(4) {
                    continue;
                }
                let r = resolvent_cubic(&f).unwrap();
                assert_eq!(
                    quartic_discriminant(&f).unwrap(),
                    cubic_discriminant(&r).unwrap(),
                    "f = {f}"
                );
            }
        }
    }

    #[test]
    fn depression_refused_char2() {
        let f2 = Fq::prime(2).unwrap();
        let one = FqPoly::one(&f2, Var::T);
        let z = FqPoly::zero(&f2, Var::T);
        let f = XPolyOverA::new(&f2, vec![one.clone(), z.clone(), z.clone(), z, one]);
        assert!(matches!(
            resolvent_cubic(&f),
            Err(GaloisError::EvenCharacteristic)
        ));
    }

    #[test]
    fn divrem_monic_roundtrip() {
        let field = f5();
        let a = XPolyOverA::new(
            &field,
            vec![
                t_poly(&field, &[1, 2]),
                t_poly(&field, &[0, 1]),
                t_poly(&field, &[3]),
                FqPoly::one(&field, Var::T),
            ],
        );
        let b = XPolyOverA::new(
            &field,
            vec![t_poly(&field, &[0, 4]), FqPoly::one(&field, Var::T)],
        );
        let (q, r) = a.divrem_monic(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
    }

    #[test]
    fn content_and_primitive_part() {
        let field = f5();
        let g = t_poly(&field, &[0, 1]); // T
        let f = XPolyOverA::new(&field, vec![g.mul(&g), g.clone(), t_poly(&field, &[0, 3])]);
        // coefficients T^2, T, 3T: content T.
        let c = f.content().unwrap();
        assert_eq!(c, g);
        let pp = f.primitive_part().unwrap();
        assert!(pp.content().unwrap().is_one());
    }
}
