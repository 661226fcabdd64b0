//! TauScalar implementations: exact rational functions, algebraic
//! extension elements, truncated local series, and lazy unreduced
//! fractions for high-degree series work.

use crate::tau::TauScalar;
use algebra_core::{FieldExtElt, FqPoly, RatFn};
use local_series::ValSeries;

impl TauScalar for RatFn {
    fn zero_like(&self) -> Self {
        RatFn::zero(self.field(), self.var())
    }
    fn one_like(&self) -> Self {
        RatFn::one(self.field(), self.var())
    }
    fn is_zero(&self) -> bool {
        RatFn::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        RatFn::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RatFn::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RatFn::mul(self, other)
    }
    fn neg(&self) -> Self {
        RatFn::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        RatFn::inv(self).ok()
    }
    fn frobenius_q(&self, k: u32) -> Self {
        self.frobenius_q_pow(k)
    }
    fn from_const(&self, c: &algebra_core::FqElem) -> Self {
        RatFn::constant(self.field(), self.var(), c.clone())
    }
}

impl TauScalar for FieldExtElt {
    fn zero_like(&self) -> Self {
        self.ext().zero()
    }
    fn one_like(&self) -> Self {
        self.ext().one()
    }
    fn is_zero(&self) -> bool {
        FieldExtElt::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        FieldExtElt::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        FieldExtElt::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        FieldExtElt::mul(self, other)
    }
    fn neg(&self) -> Self {
        FieldExtElt::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        FieldExtElt::inv(self).ok()
    }
    fn frobenius_q(&self, k: u32) -> Self {
        let q = self.ext().base().order();
        let mut acc = self.clone();
        for _ in 0..k {
            acc = acc.pow(q);
        }
        acc
    }
    fn from_const(&self, c: &algebra_core::FqElem) -> Self {
        let base = self.ext().base().clone();
        let var = self.ext().base_var();
        self.ext()
            .from_base(RatFn::constant(&base, var, c.clone()))
    }
}

impl TauScalar for ValSeries {
    fn zero_like(&self) -> Self {
        // As precise a zero as this series can witness, so accumulators
        // do not truncate sums.
        self.completion().zero(self.abs_prec())
    }
    fn one_like(&self) -> Self {
        self.completion().one(self.rel_prec().max(1))
    }
    fn is_zero(&self) -> bool {
        self.is_apparent_zero()
    }
    fn add(&self, other: &Self) -> Self {
        ValSeries::add(self, other).expect("same place")
    }
    fn sub(&self, other: &Self) -> Self {
        ValSeries::sub(self, other).expect("same place")
    }
    fn mul(&self, other: &Self) -> Self {
        ValSeries::mul(self, other).expect("same place")
    }
    fn neg(&self) -> Self {
        ValSeries::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        ValSeries::inv(self).ok()
    }
    fn frobenius_q(&self, k: u32) -> Self {
        self.pow_q(k)
    }
    fn from_const(&self, c: &algebra_core::FqElem) -> Self {
        let poly = algebra_core::FqPoly::constant(
            self.completion().base(),
            algebra_core::Var::T,
            c.clone(),
        );
        self.completion()
            .embed_poly(&poly, self.rel_prec().max(1))
            .expect("constant embeds")
    }
}

/// An unreduced polynomial fraction: no gcd is ever taken, equality is by
/// cross-multiplication. This keeps exponential/logarithm compositions
/// with very large canonical denominators (products of the factorial-like
/// D_i, degree i * q^i) out of quadratic gcd territory.
#[derive(Clone, Debug)]
pub struct PolyFrac {
    pub num: FqPoly,
    pub den: FqPoly,
}

impl PolyFrac {
    pub fn from_poly(num: FqPoly) -> PolyFrac {
        let den = FqPoly::one(num.field(), num.var());
        PolyFrac { num, den }
    }

    pub fn new(num: FqPoly, den: FqPoly) -> PolyFrac {
        assert!(!den.is_zero());
        PolyFrac { num, den }
    }

    pub fn reduce(&self) -> RatFn {
        RatFn::new(self.num.clone(), self.den.clone()).expect("nonzero denominator")
    }

    /// Rewrite the fraction over the given denominator when the division
    /// is exact: num * target / den. Returns None otherwise.
    pub fn with_denominator(&self, target: &FqPoly) -> Option<PolyFrac> {
        if self.num.is_zero() {
            return Some(PolyFrac::from_poly(self.num.clone()));
        }
        // Exact division is impossible when the degrees cannot match.
        let dn = self.num.degree()? + target.degree()?;
        if dn < self.den.degree()? {
            return None;
        }
        let scaled = self.num.mul(target);
        let (q, r) = scaled.divrem(&self.den).ok()?;
        if r.is_zero() {
            Some(PolyFrac {
                num: q,
                den: target.clone(),
            })
        } else {
            None
        }
    }
}

impl PartialEq for PolyFrac {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl TauScalar for PolyFrac {
    fn zero_like(&self) -> Self {
        PolyFrac::from_poly(FqPoly::zero(self.num.field(), self.num.var()))
    }
    fn one_like(&self) -> Self {
        PolyFrac::from_poly(FqPoly::one(self.num.field(), self.num.var()))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        PolyFrac {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        PolyFrac {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
    }
    fn neg(&self) -> Self {
        PolyFrac {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(PolyFrac {
                num: self.den.clone(),
                den: self.num.clone(),
            })
        }
    }
    fn frobenius_q(&self, k: u32) -> Self {
        let q = self.num.field().order();
        let mut acc = self.clone();
        for _ in 0..k {
            acc = PolyFrac {
                num: acc.num.pow_charp(q),
                den: acc.den.pow_charp(q),
            };
        }
        acc
    }
    fn from_const(&self, c: &algebra_core::FqElem) -> Self {
        PolyFrac::from_poly(algebra_core::FqPoly::constant(
            self.num.field(),
            self.num.var(),
            c.clone(),
        ))
    }
}
