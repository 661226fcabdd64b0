//! Dense univariate polynomials over a finite field.
//!
//! `FqPoly` stores coefficients in ascending degree order, trailing-zero
//! free, together with the field descriptor and an indeterminate tag. The
//! zero polynomial has an empty coefficient vector.

use crate::dense;
use crate::error::{AlgebraError, Result};
use crate::field::{Fq, FqElem};
use std::fmt;

/// Single-character indeterminate tag ("T", "x", "u", ...).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Var(pub char);

impl Var {
    pub const T: Var = Var('T');
    pub const X: Var = Var('x');
    pub const U: Var = Var('u');
    pub const Z: Var = Var('z');
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A univariate polynomial over F_q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FqPoly {
    field: Fq,
    var: Var,
    /// Ascending-degree coefficients; empty for zero, last entry nonzero.
    coeffs: Vec<FqElem>,
}

impl FqPoly {
    pub fn new(field: &Fq, var: Var, coeffs: Vec<FqElem>) -> FqPoly {
        let mut p = FqPoly {
            field: field.clone(),
            var,
            coeffs,
        };
        p.normalize();
        p
    }

    /// Polynomial from prime-subfield integer coefficients (ascending).
    pub fn from_ints(field: &Fq, var: Var, coeffs: &[i64]) -> FqPoly {
        let coeffs = coeffs.iter().map(|&c| field.from_int(c)).collect();
        FqPoly::new(field, var, coeffs)
    }

    pub fn zero(field: &Fq, var: Var) -> FqPoly {
        FqPoly {
            field: field.clone(),
            var,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Fq, var: Var) -> FqPoly {
        FqPoly {
            field: field.clone(),
            var,
            coeffs: vec![field.one()],
        }
    }

    pub fn constant(field: &Fq, var: Var, c: FqElem) -> FqPoly {
        FqPoly::new(field, var, vec![c])
    }

    /// The monomial c * var^deg.
    pub fn monomial(field: &Fq, var: Var, c: FqElem, deg: usize) -> FqPoly {
        if c.is_zero() {
            return FqPoly::zero(field, var);
        }
        let mut coeffs = vec![field.zero(); deg + 1];
        coeffs[deg] = c;
        FqPoly {
            field: field.clone(),
            var,
            coeffs,
        }
    }

    /// The indeterminate itself.
    pub fn gen(field: &Fq, var: Var) -> FqPoly {
        FqPoly::monomial(field, var, field.one(), 1)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> FqElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading_coeff(&self) -> Option<&FqElem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().map_or(false, |c| c.is_one())
    }

    fn check(&self, other: &FqPoly) {
        assert!(self.field == other.field, "polynomials over different fields");
        assert!(self.var == other.var, "polynomials in different indeterminates");
    }

    pub fn add(&self, other: &FqPoly) -> FqPoly {
        self.check(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i).add(&other.coeff(i)));
        }
        FqPoly::new(&self.field, self.var, coeffs)
    }

    pub fn sub(&self, other: &FqPoly) -> FqPoly {
        self.check(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i).sub(&other.coeff(i)));
        }
        FqPoly::new(&self.field, self.var, coeffs)
    }

    pub fn neg(&self) -> FqPoly {
        FqPoly {
            field: self.field.clone(),
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &FqElem) -> FqPoly {
        let coeffs = self.coeffs.iter().map(|x| x.mul(c)).collect();
        FqPoly::new(&self.field, self.var, coeffs)
    }

    /// Multiply by var^k.
    pub fn shift_up(&self, k: usize) -> FqPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        FqPoly {
            field: self.field.clone(),
            var: self.var,
            coeffs,
        }
    }

    /// Exact product. Prime fields go through the dense kernels (with the
    /// Karatsuba cross-over); extensions use generic Karatsuba/schoolbook.
    pub fn mul(&self, other: &FqPoly) -> FqPoly {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return FqPoly::zero(&self.field, self.var);
        }
        if self.field.m() == 1 {
            let a = self.to_dense();
            let b = other.to_dense();
            let prod = dense::mul(self.field.p(), &a, &b);
            return FqPoly::from_dense(&self.field, self.var, &prod);
        }
        let n = self.coeffs.len().min(other.coeffs.len());
        if n > dense::karatsuba_threshold() {
            self.mul_karatsuba_generic(other)
        } else {
            self.mul_schoolbook(other)
        }
    }

    /// Reference schoolbook product (any field).
    pub fn mul_schoolbook(&self, other: &FqPoly) -> FqPoly {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return FqPoly::zero(&self.field, self.var);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        FqPoly::new(&self.field, self.var, coeffs)
    }

    fn mul_karatsuba_generic(&self, other: &FqPoly) -> FqPoly {
        let half = self.coeffs.len().max(other.coeffs.len()) / 2;
        let (a0, a1) = self.split_at(half);
        let (b0, b1) = other.split_at(half);
        let z0 = a0.mul(&b0);
        let z2 = a1.mul(&b1);
        let z1 = a0.add(&a1).mul(&b0.add(&b1)).sub(&z0).sub(&z2);
        z0.add(&z1.shift_up(half)).add(&z2.shift_up(2 * half))
    }

    fn split_at(&self, k: usize) -> (FqPoly, FqPoly) {
        let k = k.min(self.coeffs.len());
        let low = FqPoly::new(&self.field, self.var, self.coeffs[..k].to_vec());
        let high = FqPoly::new(&self.field, self.var, self.coeffs[k..].to_vec());
        (low, high)
    }

    /// Prime-field dense coefficient vector (requires m = 1).
    pub fn to_dense(&self) -> Vec<u32> {
        debug_assert_eq!(self.field.m(), 1);
        self.coeffs.iter().map(|c| c.as_int() as u32).collect()
    }

    pub fn from_dense(field: &Fq, var: Var, coeffs: &[u32]) -> FqPoly {
        debug_assert_eq!(field.m(), 1);
        let coeffs = coeffs.iter().map(|&c| field.from_int(c as i64)).collect();
        FqPoly::new(field, var, coeffs)
    }

    /// Quotient and remainder; errors on zero divisor.
    pub fn divrem(&self, den: &FqPoly) -> Result<(FqPoly, FqPoly)> {
        self.check(den);
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.field.m() == 1 && self.coeffs.len() > 8 {
            let (q, r) = dense::divrem(self.field.p(), &self.to_dense(), &den.to_dense());
            return Ok((
                FqPoly::from_dense(&self.field, self.var, &q),
                FqPoly::from_dense(&self.field, self.var, &r),
            ));
        }
        let dd = den.degree().unwrap();
        if self.degree().map_or(true, |d| d < dd) {
            return Ok((FqPoly::zero(&self.field, self.var), self.clone()));
        }
        let lead_inv = den.leading_coeff().unwrap().inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let c = rem[k].mul(&lead_inv);
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
            FqPoly::new(&self.field, self.var, quot),
            FqPoly::new(&self.field, self.var, rem),
        ))
    }

    pub fn rem(&self, den: &FqPoly) -> Result<FqPoly> {
        Ok(self.divrem(den)?.1)
    }

    /// True iff den divides self exactly.
    pub fn divides_exactly(&self, den: &FqPoly) -> bool {
        self.rem(den).map_or(false, |r| r.is_zero())
    }

    /// Monic gcd. Errors when both inputs are zero.
    pub fn gcd(&self, other: &FqPoly) -> Result<FqPoly> {
        self.check(other);
        if self.is_zero() && other.is_zero() {
            return Err(AlgebraError::BothZero);
        }
        if self.field.m() == 1 {
            let g = dense::gcd(self.field.p(), &self.to_dense(), &other.to_dense());
            return Ok(FqPoly::from_dense(&self.field, self.var, &g));
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = std::mem::replace(&mut b, r);
        }
        Ok(a.into_monic())
    }

    /// Divide by the leading coefficient.
    pub fn into_monic(self) -> FqPoly {
        match self.leading_coeff() {
            None => self,
            Some(lc) if lc.is_one() => self,
            Some(lc) => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn eval(&self, x: &FqElem) -> FqElem {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// First formal derivative (the first Hasse-Schmidt hyperderivative).
    pub fn formal_derivative(&self) -> FqPoly {
        if self.coeffs.len() <= 1 {
            return FqPoly::zero(&self.field, self.var);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&self.field.from_int(i as i64)))
            .collect();
        FqPoly::new(&self.field, self.var, coeffs)
    }

    /// a^e via base-p digit decomposition: a^e = prod (a^(c_i))^(p^i),
    /// the Frobenius steps done by coefficient spreading (with coefficient
    /// Frobenius for extension fields). Agrees with repeated squaring.
    pub fn pow_charp(&self, e: u64) -> FqPoly {
        if e == 0 {
            return FqPoly::one(&self.field, self.var);
        }
        if self.is_zero() {
            return self.clone();
        }
        if self.field.m() == 1 {
            let out = dense::pow_charp(self.field.p(), &self.to_dense(), e);
            return FqPoly::from_dense(&self.field, self.var, &out);
        }
        // Generic path: digits of e base p; factors (a^c)(x^(p^i)) with
        // coefficient Frobenius applied i times.
        let p = self.field.p();
        let mut digits = Vec::new();
        let mut rest = e;
        while rest > 0 {
            digits.push((rest % p) as u32);
            rest /= p;
        }
        let maxd = *digits.iter().max().unwrap() as usize;
        let mut small: Vec<FqPoly> = vec![FqPoly::one(&self.field, self.var), self.clone()];
        for c in 2..=maxd {
            let next = small[c - 1].mul(self);
            small.push(next);
        }
        let mut acc = FqPoly::one(&self.field, self.var);
        let mut step: usize = 1;
        for (i, &d) in digits.iter().enumerate() {
            if d != 0 {
                let factor = small[d as usize].spread(step, i as u32);
                acc = acc.mul(&factor);
            }
            step = step.saturating_mul(p as usize);
        }
        acc
    }

    /// Substitute var^step for var and apply coefficient Frobenius p^frob_k:
    /// this is exactly raising to the p^k-th power when step = p^k.
    pub fn spread(&self, step: usize, frob_k: u32) -> FqPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[i * step] = c.frobenius_pow(frob_k);
            }
        }
        FqPoly {
            field: self.field.clone(),
            var: self.var,
            coeffs,
        }
    }

    /// Repeated-squaring power; reference implementation for tests.
    pub fn pow_repeated_squaring(&self, mut e: u64) -> FqPoly {
        let mut base = self.clone();
        let mut acc = FqPoly::one(&self.field, self.var);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// self^e mod m, by repeated squaring with reduction.
    pub fn powmod(&self, mut e: u64, m: &FqPoly) -> Result<FqPoly> {
        let mut base = self.rem(m)?;
        let mut acc = FqPoly::one(&self.field, self.var);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m)?;
            }
        }
        Ok(acc)
    }

    /// Apply the p-power Frobenius to every coefficient k times (does not
    /// change the indeterminate).
    pub fn map_coeff_frobenius(&self, k: u32) -> FqPoly {
        let coeffs = self.coeffs.iter().map(|c| c.frobenius_pow(k)).collect();
        FqPoly::new(&self.field, self.var, coeffs)
    }

    /// Retag the indeterminate (e.g. view an operator polynomial in T as a
    /// scalar polynomial in the same variable).
    pub fn with_var(&self, var: Var) -> FqPoly {
        FqPoly {
            field: self.field.clone(),
            var,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Coefficient-wise p-th root of a polynomial in var^p: the inverse of
    /// spreading, used by squarefree decomposition.
    pub fn pth_root_spread(&self) -> Result<FqPoly> {
        let p = self.field.p() as usize;
        let mut coeffs = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % p == 0 {
                coeffs.push(c.pth_root());
            } else if !c.is_zero() {
                return Err(AlgebraError::Internal("polynomial is not a p-th power"));
            }
        }
        Ok(FqPoly::new(&self.field, self.var, coeffs))
    }

    /// Resultant of self and other via the Euclidean remainder sequence.
    pub fn resultant(&self, other: &FqPoly) -> Result<FqElem> {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return Ok(self.field.zero());
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let mut acc = self.field.one();
        loop {
            let db = b.degree().unwrap();
            if db == 0 {
                // res(a, c) = c^deg(a)
                return Ok(acc.mul(&b.coeff(0).pow(a.degree().unwrap() as u64)));
            }
            let r = a.rem(&b)?;
            if r.is_zero() {
                return Ok(self.field.zero());
            }
            let da = a.degree().unwrap();
            let dr = r.degree().unwrap();
            // res(a,b) = (-1)^(da*db) lc(b)^(da-dr) res(b,r)
            let sign = if (da * db) % 2 == 1 && self.field.p() != 2 {
                self.field.from_int(-1)
            } else {
                self.field.one()
            };
            acc = acc
                .mul(&sign)
                .mul(&b.leading_coeff().unwrap().pow((da - dr) as u64));
            a = std::mem::replace(&mut b, r);
        }
    }

    /// disc(a) = (-1)^(n(n-1)/2) res(a, a') / lc(a).
    pub fn discriminant(&self) -> Result<FqElem> {
        let n = self.degree().ok_or(AlgebraError::ZeroInput("discriminant"))?;
        if n < 2 {
            return Err(AlgebraError::ConstantInput);
        }
        let res = self.resultant(&self.formal_derivative())?;
        let lc_inv = self.leading_coeff().unwrap().inv()?;
        let sign = if (n * (n - 1) / 2) % 2 == 1 {
            self.field.from_int(-1)
        } else {
            self.field.one()
        };
        Ok(sign.mul(&res).mul(&lc_inv))
    }

    /// Reverse the coefficients: x^deg * f(1/x).
    pub fn reciprocal(&self) -> FqPoly {
        let coeffs: Vec<FqElem> = self.coeffs.iter().rev().cloned().collect();
        FqPoly::new(&self.field, self.var, coeffs)
    }
}

impl fmt::Display for FqPoly {
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
                0 => write!(f, "{}", c)?,
                1 if c.is_one() => write!(f, "{}", self.var)?,
                1 => write!(f, "{}*{}", c, self.var)?,
                _ if c.is_one() => write!(f, "{}^{}", self.var, i)?,
                _ => write!(f, "{}*{}^{}", c, self.var, i)?,
            }
        }
        Ok(())
    }
}

/// Iterator over all monic polynomials of fixed degree, in base-q
/// enumeration order of the lower coefficients.
pub struct MonicIter {
    field: Fq,
    var: Var,
    degree: usize,
    idx: u64,
    count: u64,
}

impl MonicIter {
    pub fn new(field: &Fq, var: Var, degree: usize) -> MonicIter {
        let count = field.order().checked_pow(degree as u32).expect("monic count overflow");
        MonicIter {
            field: field.clone(),
            var,
            degree,
            idx: 0,
            count,
        }
    }
}

impl Iterator for MonicIter {
    type Item = FqPoly;

    fn next(&mut self) -> Option<FqPoly> {
        if self.idx >= self.count {
            return None;
        }
        let mut coeffs = Vec::with_capacity(self.degree + 1);
        let q = self.field.order();
        let mut rest = self.idx;
        for _ in 0..self.degree {
            coeffs.push(self.field.element_at(rest % q));
            rest /= q;
        }
        coeffs.push(self.field.one());
        self.idx += 1;
        Some(FqPoly {
            field: self.field.clone(),
            var: self.var,
            coeffs,
        })
    }
}

/// Named polynomial product (validated); the spec-facing entry point.
pub fn poly_mul(a: &FqPoly, b: &FqPoly) -> Result<FqPoly> {
    if a.field() != b.field() {
        return Err(AlgebraError::FieldMismatch);
    }
    if a.var() != b.var() {
        return Err(AlgebraError::VarMismatch);
    }
    Ok(a.mul(b))
}
