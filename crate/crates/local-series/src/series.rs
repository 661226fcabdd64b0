//! Truncated series in a uniformizer of a completion of k = F_q(T).
//!
//! A `ValSeries` is val + a residue-coefficient window: the element
//! sum_k coeffs[k] * pi^(val+k), known modulo pi^(val + len). The leading
//! coefficient is nonzero unless the series is an (apparent) zero marker,
//! which has an empty window and records only the absolute precision
//! O(pi^val). At the place at infinity pi = 1/T and the residue field is
//! F_q; at a finite place v the uniformizer is v and the residue field is
//! F_p[T]/(v) (prime base fields only).

use crate::error::{Result, SeriesError};
use crate::padic::{digit_len, PadicInt};
use algebra_core::{irreducible_test, Fq, FqElem, FqPoly};
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlaceKind {
    Infinity,
    Finite(FqPoly),
}

#[derive(Debug)]
pub struct CompletionInner {
    base: Fq,
    kind: PlaceKind,
    residue: Fq,
}

/// A completion of k: K = F_q((1/T)) at infinity, or k_v at a finite place.
#[derive(Clone, Debug)]
pub struct Completion {
    inner: Arc<CompletionInner>,
}

impl PartialEq for Completion {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.base == other.inner.base && self.inner.kind == other.inner.kind)
    }
}
impl Eq for Completion {}

impl Completion {
    /// K = F_q((1/T)), the place at infinity with d_inf = 1.
    pub fn infinity(base: &Fq) -> Completion {
        Completion {
            inner: Arc::new(CompletionInner {
                base: base.clone(),
                kind: PlaceKind::Infinity,
                residue: base.clone(),
            }),
        }
    }

    /// k_v for a monic irreducible v; the residue field A/v is represented
    /// as F_p[T]/(v), so the base must be a prime field.
    pub fn finite(v: &FqPoly) -> Result<Completion> {
        let base = v.field().clone();
        if base.m() != 1 {
            return Err(SeriesError::CompositeBaseAtFinitePlace);
        }
        let d = v.degree().ok_or(SeriesError::ZeroInput)?;
        if d == 0 {
            return Err(SeriesError::ZeroInput);
        }
        if d > 1 && !irreducible_test(v)? {
            return Err(SeriesError::ReducibleUniformizer);
        }
        let v = v.clone().into_monic();
        let residue = if d == 1 {
            base.clone()
        } else {
            let modulus: Vec<u64> = v.coeffs().iter().map(|c| c.as_int()).collect();
            Fq::extension(base.p(), &modulus)?
        };
        Ok(Completion {
            inner: Arc::new(CompletionInner {
                base,
                kind: PlaceKind::Finite(v),
                residue,
            }),
        })
    }

    pub fn base(&self) -> &Fq {
        &self.inner.base
    }

    pub fn residue_field(&self) -> &Fq {
        &self.inner.residue
    }

    pub fn kind(&self) -> &PlaceKind {
        &self.inner.kind
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self.inner.kind, PlaceKind::Infinity)
    }

    pub fn uniformizer_degree(&self) -> usize {
        match &self.inner.kind {
            PlaceKind::Infinity => 1,
            PlaceKind::Finite(v) => v.degree().unwrap(),
        }
    }

    /// Zero known to O(pi^abs_prec).
    pub fn zero(&self, abs_prec: i64) -> ValSeries {
        ValSeries {
            comp: self.clone(),
            val: abs_prec,
            coeffs: Vec::new(),
        }
    }

    pub fn one(&self, rel_prec: usize) -> ValSeries {
        self.from_residue(self.inner.residue.one(), rel_prec)
    }

    /// Constant from the residue field, valuation 0 (or zero marker).
    pub fn from_residue(&self, c: FqElem, rel_prec: usize) -> ValSeries {
        assert!(rel_prec >= 1);
        if c.is_zero() {
            return self.zero(rel_prec as i64);
        }
        let mut coeffs = vec![self.inner.residue.zero(); rel_prec];
        coeffs[0] = c;
        ValSeries {
            comp: self.clone(),
            val: 0,
            coeffs,
        }
    }

    /// pi^k to the given relative precision.
    pub fn uniformizer_pow(&self, k: i64, rel_prec: usize) -> ValSeries {
        let mut s = self.one(rel_prec);
        s.val = k;
        s
    }

    /// Map a residue-field representative polynomial (degree < deg v) into
    /// the residue field. Identity at infinity/degree-1 places.
    fn poly_to_residue(&self, a: &FqPoly) -> FqElem {
        let res = &self.inner.residue;
        if res.m() == 1 {
            return if a.is_zero() {
                res.zero()
            } else {
                res.from_int(a.coeff(0).as_int() as i64)
            };
        }
        let rep: Vec<u64> = (0..res.m()).map(|i| a.coeff(i).as_int()).collect();
        res.elem(&rep)
    }

    /// Embed a polynomial of A = F_q[T] into this completion, to (at least)
    /// the requested relative precision. The expansion is exact in the
    /// window; trailing digits really are zero.
    pub fn embed_poly(&self, a: &FqPoly, rel_prec: usize) -> Result<ValSeries> {
        assert!(rel_prec >= 1);
        if a.is_zero() {
            return Ok(self.zero(rel_prec as i64));
        }
        match &self.inner.kind {
            PlaceKind::Infinity => {
                let d = a.degree().unwrap();
                let n = rel_prec.max(d + 1);
                let mut coeffs = vec![self.inner.residue.zero(); n];
                for (i, c) in a.coeffs().iter().enumerate() {
                    coeffs[d - i] = c.clone();
                }
                Ok(ValSeries::new(self.clone(), -(d as i64), coeffs))
            }
            PlaceKind::Finite(v) => {
                let mut digits: Vec<FqElem> = Vec::new();
                let mut rest = a.clone();
                while !rest.is_zero() && digits.len() < rel_prec + 4 {
                    let (q, r) = rest.divrem(v)?;
                    digits.push(self.poly_to_residue(&r));
                    rest = q;
                }
                let n = rel_prec.max(digits.len());
                digits.resize(n, self.inner.residue.zero());
                Ok(ValSeries::new(self.clone(), 0, digits))
            }
        }
    }

    /// Embed a rational function (denominator must be a unit at finite
    /// places, i.e. not divisible by v).
    pub fn embed_ratfn(&self, r: &algebra_core::RatFn, rel_prec: usize) -> Result<ValSeries> {
        let num = self.embed_poly(r.num(), rel_prec)?;
        let den = self.embed_poly(r.den(), rel_prec)?;
        num.div(&den)
    }
}

/// A truncated element of a completion.
#[derive(Clone, Debug)]
pub struct ValSeries {
    comp: Completion,
    val: i64,
    coeffs: Vec<FqElem>,
}

impl PartialEq for ValSeries {
    /// Equality of the known windows: same apparent valuation and digits on
    /// the common absolute precision. Mostly useful in tests; production
    /// comparisons go through `agrees_to`.
    fn eq(&self, other: &Self) -> bool {
        if self.comp != other.comp {
            return false;
        }
        self.agrees_to(other, self.abs_prec().min(other.abs_prec()))
    }
}
impl Eq for ValSeries {}

impl ValSeries {
    /// Normalizing constructor: strips leading zero digits into the
    /// valuation, collapses all-zero windows to a zero marker.
    pub fn new(comp: Completion, val: i64, coeffs: Vec<FqElem>) -> ValSeries {
        let mut s = ValSeries { comp, val, coeffs };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                self.val += self.coeffs.len() as i64;
                self.coeffs.clear();
            }
            Some(0) => {}
            Some(k) => {
                self.coeffs.drain(..k);
                self.val += k as i64;
            }
        }
    }

    pub fn completion(&self) -> &Completion {
        &self.comp
    }

    /// True when no nonzero digit is known (zero to the stated precision).
    pub fn is_apparent_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Valuation, None for an apparent zero.
    pub fn valuation(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.val)
        }
    }

    /// Digits are known for uniformizer exponents < abs_prec().
    pub fn abs_prec(&self) -> i64 {
        self.val + self.coeffs.len() as i64
    }

    pub fn rel_prec(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    pub fn val_floor(&self) -> i64 {
        self.val
    }

    /// Digit at uniformizer exponent k (zero inside the known window).
    pub fn digit(&self, k: i64) -> FqElem {
        let idx = k - self.val;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            self.comp.residue_field().zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    fn check(&self, other: &ValSeries) -> Result<()> {
        if self.comp != other.comp {
            return Err(SeriesError::PlaceMismatch);
        }
        Ok(())
    }

    /// Truncate to absolute precision P (no-op if already coarser).
    pub fn truncate_abs(&self, p: i64) -> ValSeries {
        if self.abs_prec() <= p {
            return self.clone();
        }
        if p <= self.val {
            return self.comp.zero(p);
        }
        let keep = (p - self.val) as usize;
        ValSeries::new(self.comp.clone(), self.val, self.coeffs[..keep].to_vec())
    }

    pub fn add(&self, other: &ValSeries) -> Result<ValSeries> {
        self.check(other)?;
        let absp = self.abs_prec().min(other.abs_prec());
        let val = self.val.min(other.val);
        if absp <= val {
            return Ok(self.comp.zero(absp));
        }
        let len = (absp - val) as usize;
        let res = self.comp.residue_field().clone();
        let mut coeffs = vec![res.zero(); len];
        for (i, c) in coeffs.iter_mut().enumerate() {
            let k = val + i as i64;
            *c = self.digit(k).add(&other.digit(k));
        }
        Ok(ValSeries::new(self.comp.clone(), val, coeffs))
    }

    pub fn neg(&self) -> ValSeries {
        ValSeries {
            comp: self.comp.clone(),
            val: self.val,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, other: &ValSeries) -> Result<ValSeries> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &FqElem) -> ValSeries {
        if c.is_zero() {
            return self.comp.zero(self.abs_prec());
        }
        ValSeries::new(
            self.comp.clone(),
            self.val,
            self.coeffs.iter().map(|x| x.mul(c)).collect(),
        )
    }

    /// Multiply by pi^k.
    pub fn shift(&self, k: i64) -> ValSeries {
        ValSeries {
            comp: self.comp.clone(),
            val: self.val + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn mul(&self, other: &ValSeries) -> Result<ValSeries> {
        self.check(other)?;
        if self.is_apparent_zero() || other.is_apparent_zero() {
            // |ab| < pi^(za + vb): use the other operand's valuation floor.
            return Ok(self.comp.zero(self.val + other.val));
        }
        let rel = self.rel_prec().min(other.rel_prec());
        let val = self.val + other.val;
        let res = self.comp.residue_field().clone();
        let mut coeffs = vec![res.zero(); rel];
        for (i, a) in self.coeffs.iter().enumerate().take(rel) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= rel {
                    break;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Ok(ValSeries::new(self.comp.clone(), val, coeffs))
    }

    pub fn inv(&self) -> Result<ValSeries> {
        if self.is_apparent_zero() {
            return Err(SeriesError::DivisionByZero);
        }
        let rel = self.rel_prec();
        let res = self.comp.residue_field().clone();
        let c0_inv = self.coeffs[0].inv().map_err(SeriesError::Algebra)?;
        let mut out = vec![res.zero(); rel];
        out[0] = c0_inv.clone();
        for k in 1..rel {
            let mut acc = res.zero();
            for i in 1..=k {
                acc = acc.add(&self.coeffs[i].mul(&out[k - i]));
            }
            out[k] = acc.neg().mul(&c0_inv);
        }
        Ok(ValSeries::new(self.comp.clone(), -self.val, out))
    }

    pub fn div(&self, other: &ValSeries) -> Result<ValSeries> {
        self.mul(&other.inv()?)
    }

    /// Integer power (negative exponents through the inverse).
    pub fn pow_int(&self, e: i64) -> Result<ValSeries> {
        if e == 0 {
            return Ok(self.comp.one(self.rel_prec().max(1)));
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc: Option<ValSeries> = None;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => b.clone(),
                    Some(a) => a.mul(&b)?,
                });
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b)?;
            }
        }
        Ok(acc.unwrap())
    }

    /// Exact p-th power: digits Frobenius'd and spread p-fold (freshman's
    /// dream; the error term is also raised to the p-th power).
    pub fn pow_p(&self) -> ValSeries {
        let p = self.comp.base().p() as i64;
        if self.is_apparent_zero() {
            return self.comp.zero(self.val * p);
        }
        let res = self.comp.residue_field().clone();
        let len = (self.coeffs.len() - 1) * p as usize + 1;
        let mut coeffs = vec![res.zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[i * p as usize] = c.frobenius();
            }
        }
        ValSeries::new(self.comp.clone(), self.val * p, coeffs)
    }

    /// Raise to the q^k-th power (q = base field order).
    pub fn pow_q(&self, k: u32) -> ValSeries {
        let m = self.comp.base().m() as u32;
        let mut acc = self.clone();
        for _ in 0..k * m {
            acc = acc.pow_p();
        }
        acc
    }

    /// True when the two series agree at every digit below abs precision P.
    pub fn agrees_to(&self, other: &ValSeries, p: i64) -> bool {
        if self.comp != other.comp {
            return false;
        }
        if self.abs_prec() < p || other.abs_prec() < p {
            return false;
        }
        let lo = self.val.min(other.val);
        (lo..p).all(|k| self.digit(k) == other.digit(k))
    }

    /// Valuation of the difference, bottoming out at the common precision.
    pub fn diff_valuation(&self, other: &ValSeries) -> Result<i64> {
        let d = self.sub(other)?;
        Ok(d.valuation().unwrap_or_else(|| d.abs_prec()))
    }

    /// 1-unit test: valuation 0 and constant digit 1.
    pub fn is_one_unit(&self) -> bool {
        self.val == 0 && self.coeffs.first().map_or(false, |c| c.is_one())
    }
}

impl fmt::Display for ValSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_apparent_zero() {
            return write!(f, "O(pi^{})", self.val);
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*pi^{}", c, self.val + i as i64)?;
        }
        write!(f, " + O(pi^{})", self.abs_prec())
    }
}

/// The 1-unit part <a> = a / T^deg(a) of a monic polynomial at infinity,
/// to the requested relative precision. Errors on non-monic or zero input.
pub fn one_unit_part(a: &FqPoly, rel_prec: usize) -> Result<ValSeries> {
    if a.is_zero() {
        return Err(SeriesError::ZeroInput);
    }
    if !a.is_monic() {
        return Err(SeriesError::NotMonic);
    }
    let comp = Completion::infinity(a.field());
    let d = a.degree().unwrap() as i64;
    Ok(comp.embed_poly(a, rel_prec)?.shift(d))
}

/// u^y for a 1-unit u and p-adic y: sum_j binom(y, j) (u-1)^j, truncated at
/// the requested relative precision. Fails loudly when y's p-adic precision
/// cannot determine all required binomials.
pub fn unit_pow_padic(u: &ValSeries, y: &PadicInt, rel_prec: usize) -> Result<ValSeries> {
    if !u.is_one_unit() {
        return Err(SeriesError::NotOneUnit);
    }
    assert!(rel_prec >= 1);
    let comp = u.completion().clone();
    let p = comp.base().p();
    if y.p() != p {
        return Err(SeriesError::Precision(
            "p-adic exponent has mismatched characteristic".into(),
        ));
    }
    let prec = rel_prec.min(u.rel_prec());
    let one = comp.one(prec);
    let w = u.sub(&one)?.truncate_abs(prec as i64);
    if w.is_apparent_zero() {
        return Ok(one);
    }
    let wv = w.valuation().unwrap();
    debug_assert!(wv >= 1);
    // Largest term index with j * val(w) < prec.
    let j_max = ((prec as i64 - 1) / wv) as u64;
    let needed = digit_len(p, j_max);
    if let Some(have) = y.known_digits() {
        if have < needed {
            return Err(SeriesError::PadicPrecision {
                required: needed,
                available: have,
            });
        }
    }
    let res = comp.residue_field().clone();
    let mut acc = one;
    let mut term = comp.one(prec);
    for j in 1..=j_max {
        term = term.mul(&w)?.truncate_abs(prec as i64);
        if term.is_apparent_zero() {
            break;
        }
        let b = y.binom_mod_p(j)?;
        if b != 0 {
            acc = acc.add(&term.scale(&res.from_int(b as i64)))?;
        }
    }
    Ok(acc.truncate_abs(prec as i64))
}

/// Named series arithmetic with place validation (spec-facing dispatcher).
pub fn series_ops(a: &ValSeries, b: &ValSeries, op: SeriesOp) -> Result<ValSeries> {
    match op {
        SeriesOp::Add => a.add(b),
        SeriesOp::Mul => a.mul(b),
        SeriesOp::Inv => a.inv(),
        SeriesOp::Div => a.div(b),
    }
}

#[derive(Clone, Copy, Debug)]
pub enum SeriesOp {
    Add,
    Mul,
    Inv,
    Div,
}

/// The 1-unit part with respect to an alternative positive uniformizer
/// pi_2 = pi / u_ratio (u_ratio = pi_1/pi_2 a 1-unit): <a>_2 = <a>_1 *
/// u_ratio^(-deg a).
pub fn one_unit_part_wrt(a: &FqPoly, u_ratio: &ValSeries, rel_prec: usize) -> Result<ValSeries> {
    if !u_ratio.is_one_unit() {
        return Err(SeriesError::NotOneUnit);
    }
    let base = one_unit_part(a, rel_prec)?;
    let d = a.degree().unwrap() as i64;
    base.mul(&u_ratio.pow_int(-d)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use algebra_core::{Fq, Var};

    fn kinf(p: u64) -> Completion {
        Completion::infinity(&Fq::prime(p).unwrap())
    }

    #[test]
    fn one_unit_part_examples() {
        let f2 = Fq::prime(2).unwrap();
        // <T> = 1
        let t = FqPoly::from_ints(&f2, Var::T, &[0, 1]);
        let u = one_unit_part(&t, 8).unwrap();
        assert!(u.is_one_unit());
        assert!(u.sub(&kinf(2).one(8)).unwrap().is_apparent_zero());
        // <T+1> = 1 + 1/T
        let t1 = FqPoly::from_ints(&f2, Var::T, &[1, 1]);
        let u = one_unit_part(&t1, 8).unwrap();
        assert_eq!(u.digit(0), f2.one());
        assert_eq!(u.digit(1), f2.one());
        assert_eq!(u.digit(2), f2.zero());
        // <T^2+T+1> = 1 + 1/T + 1/T^2, by direct division oracle: the
        // embedding is the reversal, exact.
        let t3 = FqPoly::from_ints(&f2, Var::T, &[1, 1, 1]);
        let u = one_unit_part(&t3, 8).unwrap();
        for k in 0..3 {
            assert_eq!(u.digit(k), f2.one());
        }
        assert_eq!(u.digit(3), f2.zero());
        // Non-monic refused.
        let f3 = Fq::prime(3).unwrap();
        let bad = FqPoly::from_ints(&f3, Var::T, &[0, 2]);
        assert_eq!(one_unit_part(&bad, 4).unwrap_err(), SeriesError::NotMonic);
    }

    #[test]
    fn one_unit_part_multiplicative() {
        let f5 = Fq::prime(5).unwrap();
        let mut rng = algebra_core::DetRng::new(31);
        for _ in 0..40 {
            let da = 1 + rng.next_below(4) as usize;
            let db = 1 + rng.next_below(4) as usize;
            let mut ac: Vec<i64> = (0..da).map(|_| rng.next_below(5) as i64).collect();
            ac.push(1);
            let mut bc: Vec<i64> = (0..db).map(|_| rng.next_below(5) as i64).collect();
            bc.push(1);
            let a = FqPoly::from_ints(&f5, Var::T, &ac);
            let b = FqPoly::from_ints(&f5, Var::T, &bc);
            let lhs = one_unit_part(&a.mul(&b), 20).unwrap();
            let rhs = one_unit_part(&a, 20)
                .unwrap()
                .mul(&one_unit_part(&b, 20).unwrap())
                .unwrap();
            assert!(lhs.agrees_to(&rhs, 20));
        }
    }

    #[test]
    fn series_mul_inv_roundtrip() {
        let k = kinf(5);
        let f5 = k.base().clone();
        // a = 2*pi^-3 + pi^-1 + 3 + pi^2, rel prec 12
        let mut coeffs = vec![f5.zero(); 12];
        coeffs[0] = f5.from_int(2);
        coeffs[2] = f5.from_int(1);
        coeffs[3] = f5.from_int(3);
        coeffs[5] = f5.from_int(1);
        let a = ValSeries::new(k.clone(), -3, coeffs);
        let prod = a.mul(&a.inv().unwrap()).unwrap();
        assert!(prod.agrees_to(&k.one(12), prod.abs_prec()));
        assert_eq!(prod.rel_prec(), 12);
    }

    #[test]
    fn unit_squares_and_geometric() {
        let k = kinf(3);
        let f3 = k.base().clone();
        // (1+pi)(1-pi) = 1-pi^2
        let mut c = vec![f3.zero(); 10];
        c[0] = f3.one();
        c[1] = f3.one();
        let a = ValSeries::new(k.clone(), 0, c.clone());
        c[1] = f3.from_int(-1);
        let b = ValSeries::new(k.clone(), 0, c);
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.digit(0), f3.one());
        assert_eq!(prod.digit(1), f3.zero());
        assert_eq!(prod.digit(2), f3.from_int(-1));
        // inv(1+pi) = sum (-pi)^j — check by multiplying back.
        let inv = a.inv().unwrap();
        for j in 0..8 {
            assert_eq!(inv.digit(j), f3.from_int(if j % 2 == 0 { 1 } else { -1 }));
        }
    }

    #[test]
    fn unit_pow_padic_trivial_and_charp() {
        let k = kinf(5);
        let y = PadicInt::approx(5, 123, 5);
        // u = 1 -> 1 for any y.
        let u = k.one(10);
        let r = unit_pow_padic(&u, &y, 10).unwrap();
        assert!(r.agrees_to(&k.one(10), 10));
        // u = 1 + pi, y = p exact -> 1 + pi^p.
        let f5 = k.base().clone();
        let mut c = vec![f5.zero(); 10];
        c[0] = f5.one();
        c[1] = f5.one();
        let u = ValSeries::new(k.clone(), 0, c);
        let r = unit_pow_padic(&u, &PadicInt::exact(5, 5), 10).unwrap();
        assert_eq!(r.digit(0), f5.one());
        for j in 1..5 {
            assert_eq!(r.digit(j), f5.zero(), "digit {j}");
        }
        assert_eq!(r.digit(5), f5.one());
    }

    #[test]
    fn unit_pow_padic_inverse_oracle() {
        // <T+1>^(-1) equals the series inverse of <T+1>.
        let f5 = Fq::prime(5).unwrap();
        let t1 = FqPoly::from_ints(&f5, Var::T, &[1, 1]);
        let u = one_unit_part(&t1, 16).unwrap();
        let lhs = unit_pow_padic(&u, &PadicInt::exact(5, -1), 16).unwrap();
        let rhs = u.inv().unwrap();
        assert!(lhs.agrees_to(&rhs, 16));
    }

    #[test]
    fn unit_pow_padic_additive_in_exponent() {
        let f3 = Fq::prime(3).unwrap();
        let a = FqPoly::from_ints(&f3, Var::T, &[2, 1, 1]);
        let u = one_unit_part(&a, 18).unwrap();
        let y1 = PadicInt::approx(3, 14, 4);
        let y2 = PadicInt::approx(3, 61, 4);
        let sum = PadicInt::approx(3, 75, 4);
        let lhs = unit_pow_padic(&u, &sum, 18);
        // j_max = 17 needs 3 digits at p=3; 4 digits known, so fine.
        let lhs = lhs.unwrap();
        let rhs = unit_pow_padic(&u, &y1, 18)
            .unwrap()
            .mul(&unit_pow_padic(&u, &y2, 18).unwrap())
            .unwrap();
        assert!(lhs.agrees_to(&rhs, 18));
    }

    #[test]
    fn unit_pow_consistency_with_poly_power() {
        // <n>^j = <n^j> for exact integer j (Cor.: I^{s_j} = i^j).
        let f3 = Fq::prime(3).unwrap();
        let n = FqPoly::from_ints(&f3, Var::T, &[1, 2, 1, 1]);
        for j in [1u64, 2, 5, 9] {
            let lhs = unit_pow_padic(
                &one_unit_part(&n, 24).unwrap(),
                &PadicInt::exact(3, j as i64),
                24,
            )
            .unwrap();
            let rhs = one_unit_part(&n.pow_charp(j), 24).unwrap();
            assert!(lhs.agrees_to(&rhs, 24), "j={j}");
        }
    }

    #[test]
    fn padic_precision_fails_loudly() {
        let k = kinf(2);
        let f2 = k.base().clone();
        let mut c = vec![f2.zero(); 40];
        c[0] = f2.one();
        c[1] = f2.one();
        let u = ValSeries::new(k, 0, c);
        // prec 40 at p=2 needs 6 digits; 5 digits are insufficient.
        let y5 = PadicInt::approx(2, 21, 5);
        match unit_pow_padic(&u, &y5, 40) {
            Err(SeriesError::PadicPrecision { required, available }) => {
                assert_eq!((required, available), (6, 5));
            }
            other => panic!("expected precision error, got {other:?}"),
        }
        let y6 = PadicInt::approx(2, 21, 6);
        assert!(unit_pow_padic(&u, &y6, 40).is_ok());
    }

    #[test]
    fn finite_place_embedding() {
        let f5 = Fq::prime(5).unwrap();
        let v = FqPoly::from_ints(&f5, Var::T, &[0, 1]); // v = T
        let kv = Completion::finite(&v).unwrap();
        // T^2 + 3T + 2 = 2 + 3v + v^2
        let a = FqPoly::from_ints(&f5, Var::T, &[2, 3, 1]);
        let s = kv.embed_poly(&a, 6).unwrap();
        assert_eq!(s.valuation(), Some(0));
        assert_eq!(s.digit(0), f5.from_int(2));
        assert_eq!(s.digit(1), f5.from_int(3));
        assert_eq!(s.digit(2), f5.one());
        // Reducible uniformizer refused.
        let bad = FqPoly::from_ints(&f5, Var::T, &[1, 0, 1]); // roots +-2
        assert!(Completion::finite(&bad).is_err());
    }

    #[test]
    fn place_mismatch_rejected() {
        let a = kinf(3).one(4);
        let b = kinf(5).one(4);
        assert_eq!(a.add(&b).unwrap_err(), SeriesError::PlaceMismatch);
    }
}
