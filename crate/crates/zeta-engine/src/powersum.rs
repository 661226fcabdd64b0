//! Power sums over monic polynomials: S_d(j) = sum of n^j over the q^d
//! monic n of degree d.
//!
//! The sum is the definition, term by term, with each n^j computed by
//! Frobenius-digit powering. Prime fields run on the dense u32 kernels
//! with one lazy reduction per degree block; extension fields take the
//! generic path. Addition is commutative and exact, so the result is
//! independent of enumeration order.

use algebra_core::dense;
use algebra_core::{Fq, FqPoly, MonicIter, Var};

/// Base-q digit sum of j (the stopping-rule weight).
pub fn digit_sum(q: u64, mut j: u64) -> u64 {
    let mut s = 0;
    while j > 0 {
        s += j % q;
        j /= q;
    }
    s
}

/// S_d(j), exact in A.
pub fn power_sum(field: &Fq, var: Var, d: usize, j: u64) -> FqPoly {
    if d == 0 {
        return FqPoly::one(field, var);
    }
    if field.m() == 1 {
        return power_sum_dense(field, var, d, j);
    }
    let mut acc = FqPoly::zero(field, var);
    for n in MonicIter::new(field, var, d) {
        acc = acc.add(&n.pow_charp(j));
    }
    acc
}

fn power_sum_dense(field: &Fq, var: Var, d: usize, j: u64) -> FqPoly {
    let p = field.p();
    let out_len = (d as u64 * j + 1) as usize;
    let mut acc = vec![0u64; out_len];
    let count = p.checked_pow(d as u32).expect("monic count overflow");
    let mut digits = vec![0u32; d + 1];
    digits[d] = 1;
    for idx in 0..count {
        // Base-p digits of idx are the low coefficients of the monic.
        let mut rest = idx;
        for slot in digits.iter_mut().take(d) {
            *slot = (rest % p) as u32;
            rest /= p;
        }
        let njq = dense::pow_charp(p, &digits, j);
        for (a, c) in acc.iter_mut().zip(njq.iter()) {
            *a += *c as u64;
        }
    }
    let reduced: Vec<u32> = acc.iter().map(|&c| (c % p) as u32).collect();
    FqPoly::from_dense(field, var, &reduced)
}

/// Reference oracle: plain repeated-squaring powering, naive accumulation.
pub fn power_sum_oracle(field: &Fq, var: Var, d: usize, j: u64) -> FqPoly {
    let mut acc = FqPoly::zero(field, var);
    for n in MonicIter::new(field, var, d) {
        acc = acc.add(&n.pow_repeated_squaring(j));
    }
    acc
}
