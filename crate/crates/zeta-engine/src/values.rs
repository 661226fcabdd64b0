//! Zeta values at positive integers: zeta_A(i) = sum over monic n of
//! n^(-i), an element of K = F_q((1/T)).
//!
//! The sum is grouped by degree; the degree-d block T^(-di) R_d(i) with
//! R_d(i) = sum over monic n of degree d of <n>^(-i) has valuation >= d*i,
//! so blocks are added until the tail valuation exceeds the requested
//! precision. Block sums are computed by the constant-term recursion
//!
//!   R_d(i) = - sum_(k > 0, (q-1) | k) binom(-i, k) pi^(dk) R_(d-1)(i + k)
//!
//! obtained from the bijection n = T*m + c and char-p vanishing of the
//! power sums over F_q; the recursion is validated against direct
//! summation in the tests.

use crate::error::Result;
use algebra_core::Fq;
use local_series::{Completion, PadicInt, ValSeries};
use std::collections::HashMap;

/// zeta_A(i) to absolute precision `prec` (digits of 1/T).
pub fn zeta_at_positive(field: &Fq, i: u64, prec: usize) -> Result<ValSeries> {
    assert!(i >= 1);
    let comp = Completion::infinity(field);
    let mut memo: HashMap<(usize, u64), ValSeries> = HashMap::new();
    let mut acc = comp.one(prec);
    let mut d = 1usize;
    while (d as u64) * i < prec as u64 {
        let rel_needed = prec - (d as u64 * i) as usize;
        let block = block_sum(&comp, &mut memo, d, i, rel_needed)?;
        acc = acc.add(&block.shift((d as u64 * i) as i64).truncate_abs(prec as i64))?;
        d += 1;
    }
    Ok(acc.truncate_abs(prec as i64))
}

/// R_d(i) to at least the requested relative precision.
fn block_sum(
    comp: &Completion,
    memo: &mut HashMap<(usize, u64), ValSeries>,
    d: usize,
    i: u64,
    rel: usize,
) -> Result<ValSeries> {
    if d == 0 {
        return Ok(comp.one(rel.max(1)));
    }
    if let Some(hit) = memo.get(&(d, i)) {
        if hit.rel_prec() >= rel {
            return Ok(hit.truncate_abs(rel as i64));
        }
    }
    let rel = rel.max(1);
    let q = comp.base().order();
    let p = comp.base().p();
    let res = comp.residue_field().clone();
    let mut acc = comp.zero(rel as i64);
    let mut k = q - 1;
    while (d as u64) * k < rel as u64 {
        let b = PadicInt::exact(p, -(i as i64)).binom_mod_p(k)?;
        if b != 0 {
            let sub_rel = rel - (d as u64 * k) as usize;
            let sub = block_sum(comp, memo, d - 1, i + k, sub_rel)?;
            let term = sub
                .shift((d as u64 * k) as i64)
                .scale(&res.from_int(-(b as i64)))
                .truncate_abs(rel as i64);
            acc = acc.add(&term)?;
        }
        k += q - 1;
    }
    memo.insert((d, i), acc.clone());
    Ok(acc)
}
