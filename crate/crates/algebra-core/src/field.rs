//! Finite fields F_q with q = p^m in polynomial-basis representation.
//!
//! A field is described by its prime characteristic `p`, extension degree
//! `m` and a monic irreducible modulus of degree `m` over F_p. Elements are
//! residues of degree < m stored as little-endian coefficient vectors in
//! `[0, p)`. Any irreducible modulus is accepted; no operation depends on a
//! canonical choice.

use crate::error::{AlgebraError, Result};
use std::fmt;
use std::sync::Arc;

/// Largest admissible field order q = p^m.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

#[derive(Debug)]
pub struct FqInner {
    p: u64,
    m: usize,
    /// Monic modulus of degree m over F_p, little-endian, length m + 1.
    /// For m = 1 this is the trivial modulus x.
    modulus: Vec<u64>,
}

/// A finite-field descriptor. Cheap to clone; equality is structural.
#[derive(Clone, Debug)]
pub struct Fq {
    inner: Arc<FqInner>,
}

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.m == other.inner.m
                && self.inner.modulus == other.inner.modulus)
    }
}
impl Eq for Fq {}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Fq {
    /// The prime field F_p.
    pub fn prime(p: u64) -> Result<Fq> {
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        if p > MAX_FIELD_ORDER {
            return Err(AlgebraError::FieldTooLarge(p));
        }
        Ok(Fq {
            inner: Arc::new(FqInner {
                p,
                m: 1,
                modulus: vec![0, 1],
            }),
        })
    }

    /// Extension field F_p[x]/(modulus). The modulus is checked for
    /// irreducibility over F_p.
    pub fn extension(p: u64, modulus: &[u64]) -> Result<Fq> {
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        let m = modulus.len().saturating_sub(1);
        if m == 0 {
            return Err(AlgebraError::ConstantInput);
        }
        let mut modulus: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        if modulus[m] == 0 {
            return Err(AlgebraError::Parse("modulus has zero leading coefficient".into()));
        }
        // Normalize to monic.
        if modulus[m] != 1 {
            let inv = mod_inv(modulus[m], p);
            for c in modulus.iter_mut() {
                *c = *c * inv % p;
            }
        }
        let order = (p as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
        if order > MAX_FIELD_ORDER as u128 {
            return Err(AlgebraError::FieldTooLarge(order.min(u64::MAX as u128) as u64));
        }
        if m > 1 && !crate::factor::prime_modulus_irreducible(p, &modulus) {
            return Err(AlgebraError::ReducibleModulus);
        }
        Ok(Fq {
            inner: Arc::new(FqInner { p, m, modulus }),
        })
    }

    /// F_{p^m} with the lexicographically first monic irreducible modulus.
    pub fn extension_auto(p: u64, m: usize) -> Result<Fq> {
        if m == 1 {
            return Fq::prime(p);
        }
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        let count = (p as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
        if count > MAX_FIELD_ORDER as u128 {
            return Err(AlgebraError::FieldTooLarge(count.min(u64::MAX as u128) as u64));
        }
        let mut low = vec![0u64; m];
        loop {
            let mut modulus = low.clone();
            modulus.push(1);
            if crate::factor::prime_modulus_irreducible(p, &modulus) {
                return Fq::extension(p, &modulus);
            }
            // Increment base-p counter.
            let mut k = 0;
            loop {
                if k == m {
                    return Err(AlgebraError::Internal("no irreducible modulus found"));
                }
                low[k] += 1;
                if low[k] < p {
                    break;
                }
                low[k] = 0;
                k += 1;
            }
        }
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn m(&self) -> usize {
        self.inner.m
    }

    /// q = p^m.
    pub fn order(&self) -> u64 {
        self.inner.p.pow(self.inner.m as u32)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    pub fn zero(&self) -> FqElem {
        FqElem {
            field: self.clone(),
            rep: vec![0; self.inner.m],
        }
    }

    pub fn one(&self) -> FqElem {
        let mut rep = vec![0; self.inner.m];
        rep[0] = 1;
        FqElem {
            field: self.clone(),
            rep,
        }
    }

    /// Element from an integer, reduced mod p (lives in the prime subfield).
    pub fn from_int(&self, n: i64) -> FqElem {
        let p = self.inner.p as i64;
        let mut rep = vec![0; self.inner.m];
        rep[0] = n.rem_euclid(p) as u64;
        FqElem {
            field: self.clone(),
            rep,
        }
    }

    /// Element from explicit residue coefficients (little-endian, reduced mod p).
    pub fn elem(&self, rep: &[u64]) -> FqElem {
        let mut v = vec![0; self.inner.m];
        for (i, c) in rep.iter().enumerate().take(self.inner.m) {
            v[i] = c % self.inner.p;
        }
        FqElem {
            field: self.clone(),
            rep: v,
        }
    }

    /// The element whose base-p digit vector is the base-p expansion of `idx`.
    /// Enumerates the whole field as idx runs over 0..order().
    pub fn element_at(&self, mut idx: u64) -> FqElem {
        let mut rep = vec![0; self.inner.m];
        for slot in rep.iter_mut() {
            *slot = idx % self.inner.p;
            idx /= self.inner.p;
        }
        FqElem {
            field: self.clone(),
            rep,
        }
    }

    /// Iterator over all q elements.
    pub fn elements(&self) -> impl Iterator<Item = FqElem> + '_ {
        (0..self.order()).map(move |i| self.element_at(i))
    }

    /// The image of the prime-subfield generator chain: a primitive-free
    /// embedding of `sub` into `self`, determined by a root of `sub`'s
    /// modulus in `self`. Requires sub.m() | self.m() and equal p.
    pub fn embed_from(&self, sub: &Fq, x: &FqElem) -> Result<FqElem> {
        if x.field != *sub {
            return Err(AlgebraError::FieldMismatch);
        }
        if sub.p() != self.p() || self.m() % sub.m() != 0 {
            return Err(AlgebraError::FieldMismatch);
        }
        if sub.m() == 1 {
            return Ok(self.from_int(x.rep[0] as i64));
        }
        let root = self.subfield_root(sub)?;
        // Evaluate x's representation polynomial at the root.
        let mut acc = self.zero();
        for &c in x.rep.iter().rev() {
            acc = acc.mul(&root).add(&self.from_int(c as i64));
        }
        Ok(acc)
    }

    fn subfield_root(&self, sub: &Fq) -> Result<FqElem> {
        // Scan for a root of sub's modulus; the field orders here are tiny.
        for cand in self.elements() {
            let mut acc = self.zero();
            for &c in sub.inner.modulus.iter().rev() {
                acc = acc.mul(&cand).add(&self.from_int(c as i64));
            }
            if acc.is_zero() {
                return Ok(cand);
            }
        }
        Err(AlgebraError::Internal("no root of subfield modulus"))
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.m == 1 {
            write!(f, "F_{}", self.inner.p)
        } else {
            write!(f, "F_{}^{}", self.inner.p, self.inner.m)
        }
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Extended Euclid on i128; p is prime and a != 0 mod p.
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(p as i128) as u64
}

/// An element of F_q, carrying its field descriptor.
#[derive(Clone, Debug)]
pub struct FqElem {
    field: Fq,
    /// Residue coefficients, little-endian, length m, each in [0, p).
    rep: Vec<u64>,
}

impl PartialEq for FqElem {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.rep == other.rep
    }
}
impl Eq for FqElem {}

impl FqElem {
    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn rep(&self) -> &[u64] {
        &self.rep
    }

    /// For prime fields, the residue as an integer.
    pub fn as_int(&self) -> u64 {
        self.rep[0]
    }

    pub fn is_zero(&self) -> bool {
        self.rep.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.rep[0] == 1 && self.rep[1..].iter().all(|&c| c == 0)
    }

    fn check(&self, other: &FqElem) {
        assert!(
            self.field == other.field,
            "finite-field operands from different fields"
        );
    }

    pub fn add(&self, other: &FqElem) -> FqElem {
        self.check(other);
        let p = self.field.p();
        let rep = self
            .rep
            .iter()
            .zip(&other.rep)
            .map(|(a, b)| (a + b) % p)
            .collect();
        FqElem {
            field: self.field.clone(),
            rep,
        }
    }

    pub fn sub(&self, other: &FqElem) -> FqElem {
        self.check(other);
        let p = self.field.p();
        let rep = self
            .rep
            .iter()
            .zip(&other.rep)
            .map(|(a, b)| (a + p - b) % p)
            .collect();
        FqElem {
            field: self.field.clone(),
            rep,
        }
    }

    pub fn neg(&self) -> FqElem {
        let p = self.field.p();
        let rep = self.rep.iter().map(|a| (p - a) % p).collect();
        FqElem {
            field: self.field.clone(),
            rep,
        }
    }

    pub fn mul(&self, other: &FqElem) -> FqElem {
        self.check(other);
        let p = self.field.p();
        let m = self.field.m();
        if m == 1 {
            return FqElem {
                field: self.field.clone(),
                rep: vec![self.rep[0] * other.rep[0] % p],
            };
        }
        // Schoolbook product then reduction by the modulus.
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &a) in self.rep.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.rep.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % p;
            }
        }
        reduce_by_modulus(&mut prod, self.field.modulus(), p);
        prod.truncate(m);
        prod.resize(m, 0);
        FqElem {
            field: self.field.clone(),
            rep: prod,
        }
    }

    pub fn inv(&self) -> Result<FqElem> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let p = self.field.p();
        if self.field.m() == 1 {
            return Ok(FqElem {
                field: self.field.clone(),
                rep: vec![mod_inv(self.rep[0], p)],
            });
        }
        // Extended Euclid in F_p[x] against the modulus.
        let (g, s) = prime_poly_ext_gcd(&self.rep, self.field.modulus(), p);
        if g.len() != 1 {
            return Err(AlgebraError::Internal("element not invertible mod modulus"));
        }
        let ginv = mod_inv(g[0], p);
        let mut rep: Vec<u64> = s.iter().map(|c| c * ginv % p).collect();
        rep.resize(self.field.m(), 0);
        Ok(FqElem {
            field: self.field.clone(),
            rep,
        })
    }

    pub fn pow(&self, mut e: u64) -> FqElem {
        let mut base = self.clone();
        let mut acc = self.field.one();
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

    /// The p-power Frobenius a -> a^p.
    pub fn frobenius(&self) -> FqElem {
        self.pow(self.field.p())
    }

    /// a^(p^k), iterated Frobenius.
    pub fn frobenius_pow(&self, k: u32) -> FqElem {
        let mut acc = self.clone();
        for _ in 0..k {
            acc = acc.frobenius();
        }
        acc
    }

    /// True iff the element lies in the subfield of order p^d (d | m).
    pub fn is_in_subfield(&self, d: usize) -> bool {
        debug_assert!(self.field.m() % d == 0);
        self.frobenius_pow(d as u32) == *self
    }

    /// The unique p-th root (Frobenius is bijective).
    pub fn pth_root(&self) -> FqElem {
        let m = self.field.m() as u32;
        if m == 1 {
            // a^(p^0)?? For prime fields a^p = a, so the p-th root is a itself.
            return self.clone();
        }
        self.frobenius_pow(m - 1)
    }
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.m() == 1 {
            write!(f, "{}", self.rep[0])
        } else {
            write!(f, "{:?}", self.rep)
        }
    }
}

/// Reduce a little-endian F_p[x] polynomial in place by a monic modulus.
fn reduce_by_modulus(poly: &mut Vec<u64>, modulus: &[u64], p: u64) {
    let m = modulus.len() - 1;
    while poly.len() > m {
        let k = poly.len() - 1;
        let lead = poly[k];
        if lead != 0 {
            let shift = k - m;
            for (i, &c) in modulus.iter().enumerate().take(m) {
                let idx = shift + i;
                poly[idx] = (poly[idx] + (p - c % p) * lead) % p;
            }
        }
        poly.pop();
    }
}

/// Extended gcd of two F_p[x] polynomials (little-endian): returns (g, s)
/// with s*a = g mod b, g the last nonzero remainder (not normalized).
fn prime_poly_ext_gcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }
    fn divrem(num: &[u64], den: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let mut rem = num.to_vec();
        let dd = den.len() - 1;
        let dinv = mod_inv(den[dd], p);
        if rem.len() < den.len() {
            return (vec![], rem);
        }
        let mut quot = vec![0u64; rem.len() - dd];
        while rem.len() >= den.len() && !rem.is_empty() {
            let k = rem.len() - 1;
            if rem[k] == 0 {
                rem.pop();
                continue;
            }
            let c = rem[k] * dinv % p;
            let shift = k - dd;
            quot[shift] = c;
            for (i, &dc) in den.iter().enumerate() {
                let idx = shift + i;
                rem[idx] = (rem[idx] + (p - dc * c % p)) % p;
            }
            trim(&mut rem);
        }
        (quot, rem)
    }
    fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        out
    }
    fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut out = vec![0u64; a.len().max(b.len())];
        for (i, slot) in out.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *slot = (x + p - y) % p;
        }
        trim(&mut out);
        out
    }

    let mut r0: Vec<u64> = a.to_vec();
    trim(&mut r0);
    let mut r1: Vec<u64> = b.to_vec();
    trim(&mut r1);
    let mut s0: Vec<u64> = vec![1];
    let mut s1: Vec<u64> = vec![];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s = poly_sub(&s0, &poly_mul(&q, &s1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    (r0, s0)
}

/// Named field operations, with full operand validation. This is the
/// CLI/serialization entry point; the method forms assert instead.
pub fn field_ops(a: &FqElem, b: &FqElem, op: FieldOp) -> Result<FqElem> {
    if a.field() != b.field() {
        return Err(AlgebraError::FieldMismatch);
    }
    match op {
        FieldOp::Add => Ok(a.add(b)),
        FieldOp::Mul => Ok(a.mul(b)),
        FieldOp::Inv => a.inv(),
        FieldOp::Pow(e) => Ok(a.pow(e)),
        FieldOp::Frobenius => Ok(a.frobenius()),
    }
}

#[derive(Clone, Copy, Debug)]
pub enum FieldOp {
    Add,
    Mul,
    Inv,
    Pow(u64),
    Frobenius,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f5 = Fq::prime(5).unwrap();
        let a = f5.from_int(3);
        let b = f5.from_int(4);
        assert_eq!(a.add(&b), f5.from_int(2));
        assert_eq!(a.mul(&b), f5.from_int(2));
        assert_eq!(a.inv().unwrap(), f5.from_int(2));
        assert_eq!(f5.one().inv().unwrap(), f5.one());
        assert!(f5.zero().inv().is_err());
    }

    #[test]
    fn lagrange_pow() {
        for q in [2u64, 3, 5, 7] {
            let f = Fq::prime(q).unwrap();
            for x in f.elements() {
                if !x.is_zero() {
                    assert!(x.pow(q - 1).is_one());
                }
            }
        }
    }

    #[test]
    fn extension_field_f4() {
        // F_4 = F_2[x]/(x^2+x+1)
        let f4 = Fq::extension(2, &[1, 1, 1]).unwrap();
        assert_eq!(f4.order(), 4);
        let x = f4.elem(&[0, 1]);
        // x^2 = x + 1, x^3 = 1
        assert_eq!(x.pow(3), f4.one());
        assert_eq!(x.mul(&x), f4.elem(&[1, 1]));
        assert_eq!(x.inv().unwrap().mul(&x), f4.one());
    }

    #[test]
    fn frobenius_order_m_is_identity() {
        // Exhaustive over all elements for q <= 64.
        for (p, m) in [(2, 1), (2, 2), (2, 3), (2, 6), (3, 2), (5, 2), (7, 2)] {
            let f = Fq::extension_auto(p, m).unwrap();
            if f.order() > 64 {
                continue;
            }
            for x in f.elements() {
                assert_eq!(x.frobenius_pow(m as u32), x, "q={}", f.order());
                assert_eq!(x.pth_root().frobenius(), x);
            }
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2 + 1 = (x+1)^2 over F_2
        assert!(Fq::extension(2, &[1, 0, 1]).is_err());
        assert!(Fq::extension(5, &[1, 0, 1]).is_err()); // roots +-2
        assert!(Fq::extension(3, &[1, 0, 1]).is_ok());
    }

    #[test]
    fn subfield_membership() {
        let f9 = Fq::extension_auto(3, 2).unwrap();
        for x in f9.elements() {
            let expected = x.rep()[1] == 0;
            assert_eq!(x.is_in_subfield(1), expected);
        }
    }

    #[test]
    fn embedding_preserves_arithmetic() {
        let f3 = Fq::prime(3).unwrap();
        let f9 = Fq::extension_auto(3, 2).unwrap();
        for a in f3.elements() {
            for b in f3.elements() {
                let ea = f9.embed_from(&f3, &a).unwrap();
                let eb = f9.embed_from(&f3, &b).unwrap();
                assert_eq!(
                    f9.embed_from(&f3, &a.mul(&b)).unwrap(),
                    ea.mul(&eb)
                );
            }
        }
    }

    #[test]
    fn field_mismatch_detected() {
        let f3 = Fq::prime(3).unwrap();
        let f5 = Fq::prime(5).unwrap();
        assert_eq!(
            field_ops(&f3.one(), &f5.one(), FieldOp::Add),
            Err(AlgebraError::FieldMismatch)
        );
    }
}
