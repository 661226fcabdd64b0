//! Low-level dense kernels for polynomials over prime fields.
//!
//! Coefficients are `u32` residues in `[0, p)`, little-endian, with no
//! trailing-zero guarantee. Products are accumulated in `u64`, which is safe
//! for p below 2^20 and operand lengths below 2^20 (the configured word
//! budget). These kernels back the hot paths: power sums over monic
//! polynomials, Frobenius-digit powering and the big discriminant products.

use std::sync::OnceLock;

/// Degree above which multiplication switches to Karatsuba.
pub const DEFAULT_KARATSUBA_THRESHOLD: usize = 512;

static KARATSUBA_THRESHOLD: OnceLock<usize> = OnceLock::new();

/// Set the Karatsuba cross-over degree once per process (config knob).
/// Returns false if it was already set.
pub fn set_karatsuba_threshold(deg: usize) -> bool {
    KARATSUBA_THRESHOLD.set(deg.max(8)).is_ok()
}

pub fn karatsuba_threshold() -> usize {
    *KARATSUBA_THRESHOLD.get_or_init(|| DEFAULT_KARATSUBA_THRESHOLD)
}

pub fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Schoolbook product. Exact reference implementation; also the fast path
/// for small operands.
pub fn mul_schoolbook(p: u64, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut acc = vec![0u64; a.len() + b.len() - 1];
    // Iterate over the shorter operand in the outer loop.
    let (outer, inner) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    for (i, &x) in outer.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let x = x as u64;
        for (j, &y) in inner.iter().enumerate() {
            acc[i + j] += x * y as u64;
        }
    }
    acc.iter().map(|&c| (c % p) as u32).collect()
}

fn add_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d += s;
    }
}

/// Karatsuba on u64 accumulators; reduction happens once at top level.
/// Inputs must already be reduced mod p so that intermediate sums of
/// (p-1)^2-sized products cannot overflow at our size budget.
fn kara_rec(p: u64, a: &[u32], b: &[u32], threshold: usize) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len().min(b.len()) <= threshold {
        let mut acc = vec![0u64; a.len() + b.len() - 1];
        let (outer, inner) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        for (i, &x) in outer.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let x = x as u64;
            for (j, &y) in inner.iter().enumerate() {
                acc[i + j] += x * y as u64;
            }
        }
        // Partial reduction keeps accumulators small across recursion levels.
        for c in acc.iter_mut() {
            *c %= p;
        }
        return acc;
    }
    let half = a.len().max(b.len()) / 2;
    let (a0, a1) = a.split_at(half.min(a.len()));
    let (b0, b1) = b.split_at(half.min(b.len()));
    let z0 = kara_rec(p, a0, b0, threshold);
    let z2 = kara_rec(p, a1, b1, threshold);
    let asum = add_mod(p, a0, a1);
    let bsum = add_mod(p, b0, b1);
    let mut z1 = kara_rec(p, &asum, &bsum, threshold);
    // z1 -= z0 + z2, using p-complements to stay nonnegative.
    for (i, slot) in z1.iter_mut().enumerate() {
        let s = z0.get(i).copied().unwrap_or(0) % p + z2.get(i).copied().unwrap_or(0) % p;
        *slot = (*slot % p) + 2 * p - s;
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    add_into(&mut out[..z0.len()], &z0);
    if !z1.is_empty() {
        add_into(&mut out[half..half + z1.len()], &z1);
    }
    if !z2.is_empty() {
        add_into(&mut out[2 * half..2 * half + z2.len()], &z2);
    }
    for c in out.iter_mut() {
        *c %= p;
    }
    out
}

fn add_mod(p: u64, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0) as u64;
        let y = b.get(i).copied().unwrap_or(0) as u64;
        *slot = ((x + y) % p) as u32;
    }
    out
}

/// Product, choosing schoolbook below the configured threshold and
/// Karatsuba above it. Results agree exactly with `mul_schoolbook`.
pub fn mul(p: u64, a: &[u32], b: &[u32]) -> Vec<u32> {
    let threshold = karatsuba_threshold();
    if a.len().min(b.len()) <= threshold {
        mul_schoolbook(p, a, b)
    } else {
        kara_rec(p, a, b, threshold)
            .iter()
            .map(|&c| (c % p) as u32)
            .collect()
    }
}

/// Multiply a dense polynomial by a sparse one given as (exponent, coeff)
/// terms, accumulating into `acc` (which must be long enough).
fn mul_dense_sparse_into(dense: &[u32], sparse: &[(usize, u32)], acc: &mut [u64]) {
    for &(e, c) in sparse {
        if c == 0 {
            continue;
        }
        let c = c as u64;
        for (i, &d) in dense.iter().enumerate() {
            if d != 0 {
                acc[e + i] += c * d as u64;
            }
        }
    }
}

/// a(x)^(p^k) by coefficient spreading: over F_p, a(x)^(p^k) = a(x^(p^k)).
/// Returned sparsely as (exponent, coeff) pairs.
fn spread(a: &[u32], step: usize) -> Vec<(usize, u32)> {
    a.iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i * step, c))
        .collect()
}

/// a^e over F_p via base-p digit decomposition:
/// a^e = prod_i (a^(c_i))^(p^i) where e = sum c_i p^i, and each Frobenius
/// factor is a coefficient spread. Factors are multiplied in increasing
/// spread order so the dense accumulator grows once.
pub fn pow_charp(p: u64, a: &[u32], e: u64) -> Vec<u32> {
    let mut a = a.to_vec();
    trim(&mut a);
    if e == 0 {
        return vec![1];
    }
    if a.is_empty() {
        return Vec::new();
    }
    if a.len() == 1 {
        return vec![pow_mod_scalar(a[0] as u64, e, p) as u32];
    }
    // Base-p digits of e.
    let mut digits = Vec::new();
    let mut rest = e;
    while rest > 0 {
        digits.push((rest % p) as u32);
        rest /= p;
    }
    // Small powers a^c for each distinct nonzero digit.
    let maxd = *digits.iter().max().unwrap();
    let mut small: Vec<Vec<u32>> = Vec::with_capacity(maxd as usize + 1);
    small.push(vec![1]); // a^0
    small.push(a.clone());
    for c in 2..=maxd {
        let prev = &small[(c - 1) as usize];
        small.push(mul(p, prev, &a));
    }
    let deg_a = a.len() - 1;
    let out_len = deg_a as u128 * e as u128 + 1;
    assert!(out_len <= (1u128 << 31), "pow_charp result too large");
    let mut acc: Vec<u32> = vec![1];
    let mut step = 1usize;
    for &d in &digits {
        if d != 0 {
            let factor = spread(&small[d as usize], step);
            let new_len = acc.len() + factor.last().unwrap().0;
            let mut wide = vec![0u64; new_len];
            mul_dense_sparse_into(&acc, &factor, &mut wide);
            acc = wide.iter().map(|&c| (c % p) as u32).collect();
        }
        step = step.checked_mul(p as usize).unwrap_or(usize::MAX / 2);
    }
    trim(&mut acc);
    acc
}

/// Truncated series inverse: g with f*g = 1 mod x^k (f[0] != 0), by
/// Newton doubling on the dense kernels.
pub fn series_inv_prefix(p: u64, f: &[u32], k: usize) -> Vec<u32> {
    assert!(!f.is_empty() && f[0] != 0);
    let mut g = vec![pow_mod_scalar(f[0] as u64, p - 2, p) as u32];
    let mut m = 1usize;
    while m < k {
        m = (2 * m).min(k);
        // g <- g(2 - f g) mod x^m
        let fm = &f[..f.len().min(m)];
        let mut fg = mul(p, fm, &g);
        fg.truncate(m);
        let mut corr = vec![0u32; fg.len().max(1)];
        corr[0] = (2 % p) as u32;
        for (i, c) in fg.iter().enumerate() {
            let cur = corr[i] as u64;
            corr[i] = ((cur + p - *c as u64) % p) as u32;
        }
        let mut gg = mul(p, &g, &corr);
        gg.truncate(m);
        g = gg;
    }
    g.truncate(k);
    g
}

/// Long division over F_p: returns (quotient, remainder). Large balanced
/// divisions go through reversal and Newton series inversion; small ones
/// use the schoolbook loop.
pub fn divrem(p: u64, num: &[u32], den: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let mut d = den.to_vec();
    trim(&mut d);
    assert!(!d.is_empty(), "division by zero");
    let mut n = num.to_vec();
    trim(&mut n);
    if n.len() >= d.len() {
        let qlen = n.len() - d.len() + 1;
        if d.len() > 600 && qlen > 600 {
            return divrem_newton(p, &n, &d, qlen);
        }
    }
    divrem_schoolbook(p, &n, &d)
}

fn divrem_newton(p: u64, num: &[u32], den: &[u32], qlen: usize) -> (Vec<u32>, Vec<u32>) {
    let nr: Vec<u32> = num.iter().rev().copied().collect();
    let dr: Vec<u32> = den.iter().rev().copied().collect();
    let inv = series_inv_prefix(p, &dr, qlen);
    let mut qr = mul(p, &nr[..nr.len().min(qlen)], &inv);
    qr.truncate(qlen);
    qr.resize(qlen, 0);
    let quot: Vec<u32> = qr.iter().rev().copied().collect();
    // r = num - q*den has degree below deg den.
    let qd = mul(p, &quot, den);
    let mut rem = vec![0u32; den.len() - 1];
    for (i, slot) in rem.iter_mut().enumerate() {
        let a = num.get(i).copied().unwrap_or(0) as u64;
        let b = qd.get(i).copied().unwrap_or(0) as u64;
        *slot = ((a + p - b % p) % p) as u32;
    }
    trim(&mut rem);
    let mut quot = quot;
    trim(&mut quot);
    (quot, rem)
}

fn divrem_schoolbook(p: u64, num: &[u32], den: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let den = den.to_vec();
    let mut rem: Vec<u64> = num.iter().map(|&c| c as u64).collect();
    while rem.last() == Some(&0) {
        rem.pop();
    }
    let dd = den.len() - 1;
    if rem.len() <= dd {
        rem.resize(rem.len(), 0);
        return (Vec::new(), rem.iter().map(|&c| c as u32).collect());
    }
    let lead_inv = pow_mod_scalar(den[dd] as u64, p - 2, p);
    let mut quot = vec![0u32; rem.len() - dd];
    while rem.len() > dd {
        let k = rem.len() - 1;
        let c = rem[k] % p * lead_inv % p;
        if c != 0 {
            let shift = k - dd;
            quot[shift] = c as u32;
            let cneg = p - c;
            for (i, &dc) in den.iter().enumerate() {
                // Keep values reduced: every cell stays below p^2 + p.
                rem[shift + i] = (rem[shift + i] + cneg * dc as u64) % p;
            }
        }
        rem.pop();
    }
    let mut rem: Vec<u32> = rem.iter().map(|&c| (c % p) as u32).collect();
    trim(&mut rem);
    (quot, rem)
}

/// Monic gcd over F_p by an in-place Euclidean chain (single working
/// buffers, one reduction step per leading coefficient).
pub fn gcd(p: u64, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut r0: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let mut r1: Vec<u64> = b.iter().map(|&c| c as u64).collect();
    let trim64 = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    trim64(&mut r0);
    trim64(&mut r1);
    if r0.len() < r1.len() {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !r1.is_empty() {
        // r0 <- r0 mod r1, in place.
        let dd = r1.len() - 1;
        let lead_inv = pow_mod_scalar(r1[dd], p - 2, p);
        while r0.len() > dd {
            let k = r0.len() - 1;
            let c = r0[k] * lead_inv % p;
            if c != 0 {
                let shift = k - dd;
                let cneg = p - c;
                for (i, &dc) in r1.iter().enumerate() {
                    r0[shift + i] = (r0[shift + i] + cneg * dc) % p;
                }
            }
            r0.pop();
        }
        trim64(&mut r0);
        std::mem::swap(&mut r0, &mut r1);
    }
    trim64(&mut r0);
    if let Some(&lc) = r0.last() {
        if lc != 1 {
            let inv = pow_mod_scalar(lc, p - 2, p);
            for c in r0.iter_mut() {
                *c = *c * inv % p;
            }
        }
    }
    r0.iter().map(|&c| c as u32).collect()
}

pub fn pow_mod_scalar(mut a: u64, mut e: u64, p: u64) -> u64 {
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

#[cfg(test)]
mod tests {
    use super::*;

    fn pow_repeated_squaring(p: u64, a: &[u32], mut e: u64) -> Vec<u32> {
        let mut base = a.to_vec();
        let mut acc = vec![1u32];
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_schoolbook(p, &acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = mul_schoolbook(p, &base, &base);
            }
        }
        let mut acc = acc;
        trim(&mut acc);
        acc
    }

    fn rng_poly(seed: &mut u64, p: u64, len: usize) -> Vec<u32> {
        (0..len)
            .map(|_| {
                *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((*seed >> 33) % p) as u32
            })
            .collect()
    }

    #[test]
    fn karatsuba_matches_schoolbook() {
        let mut seed = 42;
        for p in [2u64, 3, 5] {
            for len in [600usize, 1037, 2001] {
                let a = rng_poly(&mut seed, p, len);
                let b = rng_poly(&mut seed, p, len - 13);
                let lhs = kara_rec(p, &a, &b, 64)
                    .iter()
                    .map(|&c| (c % p) as u32)
                    .collect::<Vec<_>>();
                let rhs = mul_schoolbook(p, &a, &b);
                assert_eq!(lhs, rhs, "p={p} len={len}");
            }
        }
    }

    #[test]
    fn frobenius_square_f2() {
        // (T+1)^2 = T^2 + 1 over F_2
        assert_eq!(pow_charp(2, &[1, 1], 2), vec![1, 0, 1]);
    }

    #[test]
    fn pow_charp_matches_repeated_squaring() {
        let mut seed = 7;
        for p in [2u64, 3, 5] {
            for e in [0u64, 1, 2, 7, 97, 1249] {
                let a = rng_poly(&mut seed, p, 4);
                let mut a = a;
                a.push(1); // keep a nonzero leading term
                let lhs = pow_charp(p, &a, e);
                let rhs = pow_repeated_squaring(p, &a, e);
                assert_eq!(lhs, rhs, "p={p} e={e}");
            }
        }
    }

    #[test]
    fn newton_division_matches_schoolbook() {
        let mut seed = 314;
        for p in [3u64, 5] {
            let num = rng_poly(&mut seed, p, 3000);
            let mut den = rng_poly(&mut seed, p, 1200);
            den.push(1 + ((seed >> 7) % (p - 1)) as u32);
            let (q1, r1) = divrem(p, &num, &den);
            let (q2, r2) = divrem_schoolbook(p, &num, &den);
            assert_eq!(q1, q2, "p={p}");
            assert_eq!(r1, r2, "p={p}");
            // Reconstruction.
            let mut recon = mul(p, &q1, &den);
            for (i, c) in r1.iter().enumerate() {
                recon[i] = ((recon[i] as u64 + *c as u64) % p) as u32;
            }
            let mut num_t = num.clone();
            trim(&mut num_t);
            let mut recon_t = recon;
            trim(&mut recon_t);
            assert_eq!(recon_t, num_t);
        }
    }

    #[test]
    fn pow_charp_zero_cases() {
        assert_eq!(pow_charp(5, &[], 0), vec![1]);
        assert_eq!(pow_charp(5, &[], 3), Vec::<u32>::new());
        assert_eq!(pow_charp(5, &[3], 4), vec![81 % 5]);
    }
}
