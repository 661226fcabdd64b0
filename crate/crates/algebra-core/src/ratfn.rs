//! Rational functions over F_q: the scalar field k = F_q(T) and friends.
//!
//! Always normalized: denominator monic and nonzero, gcd(num, den) = 1.

use crate::error::{AlgebraError, Result};
use crate::field::{Fq, FqElem};
use crate::poly::{FqPoly, Var};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFn {
    num: FqPoly,
    den: FqPoly,
}

impl RatFn {
    /// num / den, normalized. Errors on zero denominator.
    pub fn new(num: FqPoly, den: FqPoly) -> Result<RatFn> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let mut r = RatFn { num, den };
        r.normalize()?;
        Ok(r)
    }

    pub fn from_poly(num: FqPoly) -> RatFn {
        let den = FqPoly::one(num.field(), num.var());
        RatFn { num, den }
    }

    pub fn zero(field: &Fq, var: Var) -> RatFn {
        RatFn {
            num: FqPoly::zero(field, var),
            den: FqPoly::one(field, var),
        }
    }

    pub fn one(field: &Fq, var: Var) -> RatFn {
        RatFn {
            num: FqPoly::one(field, var),
            den: FqPoly::one(field, var),
        }
    }

    pub fn constant(field: &Fq, var: Var, c: FqElem) -> RatFn {
        RatFn {
            num: FqPoly::constant(field, var, c),
            den: FqPoly::one(field, var),
        }
    }

    fn normalize(&mut self) -> Result<()> {
        if self.num.is_zero() {
            self.den = FqPoly::one(self.num.field(), self.num.var());
            return Ok(());
        }
        let g = self.num.gcd(&self.den)?;
        if g.degree() != Some(0) {
            self.num = self.num.divrem(&g)?.0;
            self.den = self.den.divrem(&g)?.0;
        }
        let lc = self.den.leading_coeff().unwrap().clone();
        if !lc.is_one() {
            let inv = lc.inv()?;
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
        Ok(())
    }

    pub fn num(&self) -> &FqPoly {
        &self.num
    }

    pub fn den(&self) -> &FqPoly {
        &self.den
    }

    pub fn field(&self) -> &Fq {
        self.num.field()
    }

    pub fn var(&self) -> Var {
        self.num.var()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, other: &RatFn) -> RatFn {
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RatFn::new(num, den).expect("nonzero denominator")
    }

    pub fn sub(&self, other: &RatFn) -> RatFn {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFn {
        RatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFn) -> RatFn {
        let num = self.num.mul(&other.num);
        let den = self.den.mul(&other.den);
        RatFn::new(num, den).expect("nonzero denominator")
    }

    pub fn inv(&self) -> Result<RatFn> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        RatFn::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &RatFn) -> Result<RatFn> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: u64) -> RatFn {
        RatFn {
            num: self.num.pow_charp(e),
            den: self.den.pow_charp(e),
        }
    }

    /// Raise to the q^k-th power (numerator and denominator spread).
    pub fn frobenius_q_pow(&self, k: u32) -> RatFn {
        let q = self.field().order();
        let mut acc = self.clone();
        for _ in 0..k {
            acc = acc.pow(q);
        }
        acc
    }

    /// First hyperderivative d/dT via the quotient rule.
    pub fn derivative(&self) -> RatFn {
        let dn = self.num.formal_derivative();
        let dd = self.den.formal_derivative();
        let num = dn.mul(&self.den).sub(&self.num.mul(&dd));
        let den = self.den.mul(&self.den);
        RatFn::new(num, den).expect("nonzero denominator")
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        let f5 = Fq::prime(5).unwrap();
        // (2T^2 + 2T) / (4T) = (T + 1) * 3... check: gcd strips T, 2/4 = 3 mod 5.
        let num = FqPoly::from_ints(&f5, Var::T, &[0, 2, 2]);
        let den = FqPoly::from_ints(&f5, Var::T, &[0, 4]);
        let r = RatFn::new(num, den).unwrap();
        assert!(r.den().is_one());
        assert_eq!(r.num(), &FqPoly::from_ints(&f5, Var::T, &[3, 3]));
    }

    #[test]
    fn field_axioms_spot() {
        let f3 = Fq::prime(3).unwrap();
        let t = RatFn::from_poly(FqPoly::gen(&f3, Var::T));
        let a = t.add(&RatFn::one(&f3, Var::T)).inv().unwrap(); // 1/(T+1)
        let b = t.mul(&t).sub(&RatFn::one(&f3, Var::T)); // T^2 - 1
        assert!(a.mul(&a.inv().unwrap()).is_one());
        // 1/(T+1) * (T^2-1) = T-1
        let prod = a.mul(&b);
        assert!(prod.den().is_one());
        assert_eq!(prod.num(), &FqPoly::from_ints(&f3, Var::T, &[-1, 1]));
    }

    #[test]
    fn derivative_quotient_rule() {
        let f5 = Fq::prime(5).unwrap();
        let t = RatFn::from_poly(FqPoly::gen(&f5, Var::T));
        // d/dT (1/T) = -1/T^2
        let inv_t = t.inv().unwrap();
        let d = inv_t.derivative();
        let expect = RatFn::new(
            FqPoly::from_ints(&f5, Var::T, &[-1]),
            FqPoly::from_ints(&f5, Var::T, &[0, 0, 1]),
        )
        .unwrap();
        assert_eq!(d, expect);
        // Derivation law d(ab) = a db + b da on random small inputs.
        let a = t.mul(&t).add(&RatFn::one(&f5, Var::T));
        let b = inv_t.add(&t);
        let lhs = a.mul(&b).derivative();
        let rhs = a.mul(&b.derivative()).add(&b.mul(&a.derivative()));
        assert_eq!(lhs, rhs);
    }
}
