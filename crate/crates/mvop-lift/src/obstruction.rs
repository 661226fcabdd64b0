//! Solvability of X^(p^s) = target inside the tangent algebra: writing
//! X = c + n with scalar c and nilpotent n gives X^(p^s) = c^(p^s) +
//! n^(p^s), and n^(p^s) only populates eps-orders divisible by p^s. A
//! target with a nonzero nilpotent coefficient at an order not divisible
//! by p^s is therefore obstructed; a purely scalar target lifts only as a
//! (possibly inseparable) scalar.

use crate::tangent::TangentElt;
use carlitz_modules::TauScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Liftability<S> {
    /// Solvable with a genuinely nilpotent part: the witness records, for
    /// each populated eps-order i of the target, the pair (i / p^s, c_i)
    /// whose formal p^s-th root is the witness coefficient.
    Liftable { witness: Vec<(usize, S)> },
    /// Nilpotent part zero: only scalar solutions exist (the p^s-th root
    /// of the scalar, inseparable in general).
    ScalarOnly,
    /// Inconsistent: an eps-order not divisible by p^s is populated.
    Obstructed { order: usize },
}

/// Decide X^(p^s) = target over the scalar field's perfect closure.
pub fn liftability_check<S: TauScalar>(
    target: &TangentElt<S>,
    p: u64,
    s: u32,
) -> Liftability<S> {
    assert!(s >= 1);
    let e = p.pow(s) as usize;
    let nil = target.nilpotent_part();
    if nil.is_zero() {
        return Liftability::ScalarOnly;
    }
    let mut witness = Vec::new();
    for (i, c) in nil.coeffs.iter().enumerate().skip(1) {
        if c.is_zero() {
            continue;
        }
        if i % e != 0 {
            return Liftability::Obstructed { order: i };
        }
        witness.push((i / e, c.clone()));
    }
    Liftability::Liftable { witness }
}

/// Verify an exhibited root: X = scalar + n must reproduce the target.
pub fn verify_lift_witness<S: TauScalar>(
    x: &TangentElt<S>,
    target: &TangentElt<S>,
    p: u64,
    s: u32,
) -> bool {
    x.pow_p_s(p, s) == *target
}
