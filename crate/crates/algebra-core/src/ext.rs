//! Algebraic extensions k(lambda) = k[u]/(f) of the rational function field.
//!
//! `UPoly` is a polynomial in u with `RatFn` coefficients. `ExtField` pins
//! the minimal polynomial; construction checks monicity and separability
//! (gcd(f, df/du) = 1). Irreducibility of f is the caller's contract: a
//! non-invertible representative encountered later surfaces as an internal
//! error rather than being silently accepted.

use crate::error::{AlgebraError, Result};
use crate::field::Fq;
use crate::poly::Var;
use crate::ratfn::RatFn;
use std::fmt;
use std::sync::Arc;

/// Polynomial in `u` with rational-function coefficients, ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    pub coeffs: Vec<RatFn>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<RatFn>) -> UPoly {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> UPoly {
        UPoly { coeffs: Vec::new() }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize, field: &Fq, var: Var) -> RatFn {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| RatFn::zero(field, var))
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        UPoly::new(out)
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let field = self.coeffs[0].field().clone();
        let var = self.coeffs[0].var();
        let mut out = vec![RatFn::zero(&field, var); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UPoly::new(out)
    }

    pub fn neg(&self) -> UPoly {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &RatFn) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    /// Formal derivative with respect to u.
    pub fn derivative_u(&self) -> UPoly {
        if self.coeffs.len() <= 1 {
            return UPoly::zero();
        }
        let field = self.coeffs[0].field().clone();
        let var = self.coeffs[0].var();
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                let scalar = RatFn::constant(&field, var, field.from_int(i as i64));
                c.mul(&scalar)
            })
            .collect();
        UPoly::new(out)
    }

    /// Coefficient-wise first hyperderivative d/dT.
    pub fn derivative_coeffs(&self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| c.derivative()).collect())
    }

    pub fn divrem(&self, den: &UPoly) -> Result<(UPoly, UPoly)> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let dd = den.degree().unwrap();
        if self.degree().map_or(true, |d| d < dd) {
            return Ok((UPoly::zero(), self.clone()));
        }
        let field = den.coeffs[0].field().clone();
        let var = den.coeffs[0].var();
        let lead_inv = den.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![RatFn::zero(&field, var); rem.len() - dd];
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
        Ok((UPoly::new(quot), UPoly::new(rem)))
    }

    pub fn gcd(&self, other: &UPoly) -> Result<UPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(AlgebraError::BothZero);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divrem(&b)?.1;
            a = std::mem::replace(&mut b, r);
        }
        // Normalize monic.
        let lc = a.coeffs.last().unwrap().clone();
        Ok(a.scale(&lc.inv()?))
    }
}

/// The extension context: k[u]/(f) with f monic and separable.
#[derive(Debug)]
pub struct ExtFieldInner {
    base: Fq,
    base_var: Var,
    u_var: Var,
    minpoly: UPoly,
}

#[derive(Clone, Debug)]
pub struct ExtField {
    inner: Arc<ExtFieldInner>,
}

impl PartialEq for ExtField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.base == other.inner.base
                && self.inner.minpoly == other.inner.minpoly)
    }
}
impl Eq for ExtField {}

impl ExtField {
    /// Build k[u]/(f). Checks that f is monic of degree >= 1 and separable;
    /// irreducibility is trusted (failures surface as internal errors
    /// during inversion).
    pub fn new(minpoly: UPoly, u_var: Var) -> Result<ExtField> {
        let deg = minpoly.degree().ok_or(AlgebraError::ZeroInput("minimal polynomial"))?;
        if deg == 0 {
            return Err(AlgebraError::ConstantInput);
        }
        if !minpoly.coeffs[deg].is_one() {
            return Err(AlgebraError::NotMonic);
        }
        let base = minpoly.coeffs[0].field().clone();
        let base_var = minpoly.coeffs[0].var();
        let fprime = minpoly.derivative_u();
        if fprime.is_zero() {
            return Err(AlgebraError::NotSeparable);
        }
        let g = minpoly.gcd(&fprime)?;
        if g.degree() != Some(0) {
            return Err(AlgebraError::NotSeparable);
        }
        Ok(ExtField {
            inner: Arc::new(ExtFieldInner {
                base,
                base_var,
                u_var,
                minpoly,
            }),
        })
    }

    pub fn base(&self) -> &Fq {
        &self.inner.base
    }

    pub fn base_var(&self) -> Var {
        self.inner.base_var
    }

    pub fn u_var(&self) -> Var {
        self.inner.u_var
    }

    pub fn minpoly(&self) -> &UPoly {
        &self.inner.minpoly
    }

    pub fn degree(&self) -> usize {
        self.inner.minpoly.degree().unwrap()
    }

    pub fn zero(&self) -> FieldExtElt {
        FieldExtElt {
            ext: self.clone(),
            rep: UPoly::zero(),
        }
    }

    pub fn one(&self) -> FieldExtElt {
        FieldExtElt {
            ext: self.clone(),
            rep: UPoly::new(vec![RatFn::one(&self.inner.base, self.inner.base_var)]),
        }
    }

    /// The class of u itself (the adjoined root).
    pub fn generator(&self) -> FieldExtElt {
        let zero = RatFn::zero(&self.inner.base, self.inner.base_var);
        let one = RatFn::one(&self.inner.base, self.inner.base_var);
        self.elem(UPoly::new(vec![zero, one]))
    }

    pub fn from_base(&self, c: RatFn) -> FieldExtElt {
        self.elem(UPoly::new(vec![c]))
    }

    pub fn elem(&self, rep: UPoly) -> FieldExtElt {
        let rep = rep
            .divrem(&self.inner.minpoly)
            .expect("monic minimal polynomial")
            .1;
        FieldExtElt {
            ext: self.clone(),
            rep,
        }
    }
}

/// An element of k[u]/(f), reduced mod f.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldExtElt {
    ext: ExtField,
    rep: UPoly,
}

impl FieldExtElt {
    pub fn ext(&self) -> &ExtField {
        &self.ext
    }

    pub fn rep(&self) -> &UPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rep.degree() == Some(0) && self.rep.coeffs[0].is_one()
    }

    fn check(&self, other: &FieldExtElt) {
        assert!(self.ext == other.ext, "elements of different extensions");
    }

    pub fn add(&self, other: &FieldExtElt) -> FieldExtElt {
        self.check(other);
        FieldExtElt {
            ext: self.ext.clone(),
            rep: self.rep.add(&other.rep),
        }
    }

    pub fn sub(&self, other: &FieldExtElt) -> FieldExtElt {
        self.check(other);
        FieldExtElt {
            ext: self.ext.clone(),
            rep: self.rep.sub(&other.rep),
        }
    }

    pub fn neg(&self) -> FieldExtElt {
        FieldExtElt {
            ext: self.ext.clone(),
            rep: self.rep.neg(),
        }
    }

    pub fn mul(&self, other: &FieldExtElt) -> FieldExtElt {
        self.check(other);
        self.ext.elem(self.rep.mul(&other.rep))
    }

    /// Inverse via extended Euclid against the minimal polynomial. A
    /// non-unit nonzero representative means f was reducible; reported as
    /// an internal error per the construction contract.
    pub fn inv(&self) -> Result<FieldExtElt> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let f = &self.ext.inner.minpoly;
        // Extended Euclid: s*rep + t*f = g.
        let mut r0 = self.rep.clone();
        let mut r1 = f.clone();
        let one = RatFn::one(&self.ext.inner.base, self.ext.inner.base_var);
        let mut s0 = UPoly::new(vec![one]);
        let mut s1 = UPoly::zero();
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if r0.degree() != Some(0) {
            return Err(AlgebraError::Internal(
                "non-invertible representative: minimal polynomial is reducible",
            ));
        }
        let scale = r0.coeffs[0].inv()?;
        Ok(self.ext.elem(s0.scale(&scale)))
    }

    pub fn div(&self, other: &FieldExtElt) -> Result<FieldExtElt> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, mut e: u64) -> FieldExtElt {
        let mut base = self.clone();
        let mut acc = self.ext.one();
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
}

impl fmt::Display for FieldExtElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let u = self.ext.u_var();
        let mut first = true;
        for (i, c) in self.rep.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})*{}", c, u)?,
                _ => write!(f, "({})*{}^{}", c, u, i)?,
            }
        }
        Ok(())
    }
}

/// Named extension arithmetic, validated; the spec-facing entry point.
pub fn ext_arith(a: &FieldExtElt, b: &FieldExtElt, op: ExtOp) -> Result<FieldExtElt> {
    if a.ext() != b.ext() {
        return Err(AlgebraError::FieldMismatch);
    }
    match op {
        ExtOp::Add => Ok(a.add(b)),
        ExtOp::Sub => Ok(a.sub(b)),
        ExtOp::Mul => Ok(a.mul(b)),
        ExtOp::Div => a.div(b),
    }
}

#[derive(Clone, Copy, Debug)]
pub enum ExtOp {
    Add,
    Sub,
    Mul,
    Div,
}
