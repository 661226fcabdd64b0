//! p-adic exponents: exact integers or residues known mod p^M.
//!
//! Binomial coefficients binom(y, j) mod p are computed by Lucas' theorem
//! on the base-p digits of y. A residue mod p^s determines binom(y, j) mod
//! p for every j < p^s, so the required precision for a truncated binomial
//! series is the digit length of the largest term index; requests beyond
//! the known digits fail loudly with the required modulus exponent.

use crate::error::{Result, SeriesError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PadicKind {
    /// Exactly known integer (e.g. y = -j).
    Exact(i64),
    /// Residue class mod p^m, 0 <= value < p^m.
    Approx { value: u64, m: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicInt {
    p: u64,
    kind: PadicKind,
}

impl PadicInt {
    pub fn exact(p: u64, value: i64) -> PadicInt {
        PadicInt {
            p,
            kind: PadicKind::Exact(value),
        }
    }

    pub fn approx(p: u64, value: u64, m: u32) -> PadicInt {
        let modulus = p.checked_pow(m).expect("p^m overflows u64");
        PadicInt {
            p,
            kind: PadicKind::Approx {
                value: value % modulus,
                m,
            },
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.kind, PadicKind::Exact(_))
    }

    pub fn as_exact(&self) -> Option<i64> {
        match self.kind {
            PadicKind::Exact(v) => Some(v),
            _ => None,
        }
    }

    /// Known digit count: unlimited for exact values.
    pub fn known_digits(&self) -> Option<u32> {
        match self.kind {
            PadicKind::Exact(_) => None,
            PadicKind::Approx { m, .. } => Some(m),
        }
    }

    pub fn neg(&self) -> PadicInt {
        match self.kind {
            PadicKind::Exact(v) => PadicInt::exact(self.p, -v),
            PadicKind::Approx { value, m } => {
                let modulus = self.p.pow(m);
                PadicInt::approx(self.p, (modulus - value) % modulus, m)
            }
        }
    }

    pub fn add_int(&self, k: i64) -> PadicInt {
        match self.kind {
            PadicKind::Exact(v) => PadicInt::exact(self.p, v + k),
            PadicKind::Approx { value, m } => {
                let modulus = self.p.pow(m) as i128;
                let v = (value as i128 + k as i128).rem_euclid(modulus) as u64;
                PadicInt::approx(self.p, v, m)
            }
        }
    }

    /// Multiply by an exact integer.
    pub fn mul_int(&self, k: i64) -> PadicInt {
        match self.kind {
            PadicKind::Exact(v) => PadicInt::exact(self.p, v * k),
            PadicKind::Approx { value, m } => {
                let modulus = self.p.pow(m) as i128;
                let v = (value as i128 * k as i128).rem_euclid(modulus) as u64;
                PadicInt::approx(self.p, v, m)
            }
        }
    }

    /// The residue y mod p^s, if known to that precision.
    pub fn residue(&self, s: u32) -> Result<u64> {
        let modulus = self
            .p
            .checked_pow(s)
            .ok_or(SeriesError::Precision("p^s overflows".into()))?;
        match self.kind {
            PadicKind::Exact(v) => Ok((v as i128).rem_euclid(modulus as i128) as u64),
            PadicKind::Approx { value, m } => {
                if m < s {
                    Err(SeriesError::PadicPrecision {
                        required: s,
                        available: m,
                    })
                } else {
                    Ok(value % modulus)
                }
            }
        }
    }

    /// binom(y, j) mod p via Lucas on the first digit_len(j) base-p digits.
    pub fn binom_mod_p(&self, j: u64) -> Result<u64> {
        let s = digit_len(self.p, j);
        let mut y = self.residue(s)?;
        let mut j = j;
        let p = self.p;
        let mut acc = 1u64;
        while j > 0 {
            let yd = y % p;
            let jd = j % p;
            if jd > yd {
                return Ok(0);
            }
            acc = acc * binom_small(yd, jd, p) % p;
            y /= p;
            j /= p;
        }
        Ok(acc)
    }
}

/// Number of base-p digits of j (1 for j = 0).
pub fn digit_len(p: u64, j: u64) -> u32 {
    let mut len = 1;
    let mut j = j / p;
    while j > 0 {
        len += 1;
        j /= p;
    }
    len
}

fn binom_small(n: u64, k: u64, p: u64) -> u64 {
    // n, k < p <= 2^20; the numerator product stays well inside u128.
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num = num * (n - i) as u128 % p as u128;
        den = den * (i + 1) as u128 % p as u128;
    }
    let den_inv = mod_pow(den as u64, p - 2, p);
    (num as u64) * den_inv % p
}

fn mod_pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}
