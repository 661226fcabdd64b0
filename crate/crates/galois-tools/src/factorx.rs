//! Complete factorization of low-degree monic polynomials in A[x] over
//! k = F_q(T), by the T-adic analogue of the Zassenhaus method: factor
//! modulo a good prime v, Hensel-lift the factors to v-power precision
//! beyond the coefficient-degree bound, and recombine subsets by trial
//! division. For monic f the true factor coefficients have T-degree at
//! most deg(f) * max coefficient degree, and polynomial remainders mod
//! v^B are canonical, so a lifted candidate either equals the true factor
//! or fails division — the outcome is a certificate either way.

use crate::error::{GaloisError, Result};
use crate::modp::ResidueCtx;
use crate::xpoly::XPolyOverA;
use algebra_core::{poly_factor, DetRng, Fq, FqPoly, MonicIter, Var};

/// Monic irreducible factors of a monic squarefree f over k, with proof by
/// reconstruction (the product of the returned factors is f).
pub fn factor_monic_squarefree(f: &XPolyOverA, rng: &mut DetRng) -> Result<Vec<XPolyOverA>> {
    let n = f.degree().ok_or(GaloisError::ZeroInput)?;
    if !f.is_monic() {
        return Err(GaloisError::NotMonic);
    }
    if n <= 1 {
        return Ok(vec![f.clone()]);
    }
    let field = f.field().clone();
    let (ctx, fbar) = good_prime(f)?;
    let modular = poly_factor(&fbar, rng)?;
    if modular.factors.len() == 1 && modular.factors[0].1 == 1 {
        return Ok(vec![f.clone()]);
    }
    // Lift precision: at the infinite place every root of f has valuation
    // at least -max_d ceil(deg(c_(n-d))/d), so monic factor coefficients
    // have T-degree at most n times that slope.
    let max_slope = (1..=n)
        .filter_map(|d| f.coeff(n - d).degree().map(|dc| dc.div_ceil(d)))
        .max()
        .unwrap_or(0);
    let bound = n * max_slope + 2;
    let mut prec_bits = 1usize;
    while (1usize << prec_bits) * ctx.v.degree().unwrap() < bound {
        prec_bits += 1;
    }
    let prec = 1usize << prec_bits;
    let lifted = hensel_lift_tree(
        f,
        &ctx,
        modular.factors.iter().map(|(g, _)| g.clone()).collect(),
        prec,
    )?;
    // Recombine subsets by trial division.
    let mut remaining: Vec<XPolyOverA> = lifted;
    let mut current = f.clone();
    let mut out = Vec::new();
    'outer: loop {
        let k = remaining.len();
        if k == 0 {
            break;
        }
        if k == 1 {
            out.push(current.clone());
            break;
        }
        for size in 1..=k / 2 {
            for subset in subsets_of_size(k, size) {
                let mut cand = XPolyOverA::new(&field, vec![FqPoly::one(&field, Var::T)]);
                for &i in &subset {
                    cand = mul_mod_vpow(&cand, &remaining[i], &ctx.v, prec);
                }
                let (q, r) = current.divrem_monic(&cand)?;
                if r.is_zero() {
                    out.push(cand);
                    current = q;
                    let mut keep = Vec::new();
                    for (i, g) in remaining.drain(..).enumerate() {
                        if !subset.contains(&i) {
                            keep.push(g);
                        }
                    }
                    remaining = keep;
                    continue 'outer;
                }
            }
        }
        // No proper subset divides: the rest is irreducible.
        out.push(current.clone());
        break;
    }
    out.sort_by_key(|g| g.degree());
    Ok(out)
}

/// Pick a prime v where f stays squarefree of full degree (degree 1 first,
/// then 2, ...). Such v exists because disc(f) has finitely many prime
/// divisors.
fn good_prime(f: &XPolyOverA) -> Result<(ResidueCtx, FqPoly)> {
    let field = f.field().clone();
    for d in 1..=6usize {
        for v in MonicIter::new(&field, Var::T, d) {
            if d > 1 && !algebra_core::irreducible_test(&v)? {
                continue;
            }
            let ctx = ResidueCtx::new(&v)?;
            let fbar = ctx.reduce_xpoly(f)?;
            if fbar.degree() != f.degree() {
                continue;
            }
            let dfbar = fbar.formal_derivative();
            if dfbar.is_zero() {
                continue;
            }
            if fbar.gcd(&dfbar)?.degree() == Some(0) {
                return Ok((ctx, fbar));
            }
        }
    }
    Err(GaloisError::ZeroInput)
}

/// Lift the modular factorization f = g1 ... gk (mod v) to mod v^prec by
/// binary splitting with quadratic Hensel steps.
fn hensel_lift_tree(
    f: &XPolyOverA,
    ctx: &ResidueCtx,
    modular: Vec<FqPoly>,
    prec: usize,
) -> Result<Vec<XPolyOverA>> {
    if modular.len() == 1 {
        return Ok(vec![f.clone()]);
    }
    let half = modular.len() / 2;
    let (left, right) = modular.split_at(half);
    let g0: FqPoly = left
        .iter()
        .fold(FqPoly::one(&ctx.field, Var::X), |acc, g| acc.mul(g));
    let h0: FqPoly = right
        .iter()
        .fold(FqPoly::one(&ctx.field, Var::X), |acc, g| acc.mul(g));
    let (g, h) = hensel_lift_pair(f, ctx, &g0, &h0, prec)?;
    let mut out = hensel_lift_tree(&g, ctx, left.to_vec(), prec)?;
    out.extend(hensel_lift_tree(&h, ctx, right.to_vec(), prec)?);
    Ok(out)
}

/// Quadratic Hensel lifting of a coprime split f = g h (mod v) to v^prec.
fn hensel_lift_pair(
    f: &XPolyOverA,
    ctx: &ResidueCtx,
    g0: &FqPoly,
    h0: &FqPoly,
    prec: usize,
) -> Result<(XPolyOverA, XPolyOverA)> {
    let field = f.field().clone();
    let v = &ctx.v;
    // Bezout: s g0 + t h0 = 1 over A/v.
    let (s0, t0) = bezout(g0, h0)?;
    let mut g = lift_poly(&field, ctx, g0);
    let mut h = lift_poly(&field, ctx, h0);
    let mut s = lift_poly(&field, ctx, &s0);
    let mut t = lift_poly(&field, ctx, &t0);
    let mut k = 1usize;
    while k < prec {
        k *= 2;
        let vk = v.pow_charp(k as u64);
        // e = f - g h (mod v^k)
        let e = reduce_xpoly_mod(&f.sub(&g.mul(&h)), &vk)?;
        // g += e t mod (g, v^k) ... standard update:
        // q, r with e t = q g + r: h += e s + q h ; g += r.
        let et = reduce_xpoly_mod(&e.mul(&t), &vk)?;
        let (q, r) = divrem_mod(&et, &g, &vk)?;
        let es = reduce_xpoly_mod(&e.mul(&s), &vk)?;
        let qh = reduce_xpoly_mod(&q.mul(&h), &vk)?;
        g = reduce_xpoly_mod(&g.add(&r), &vk)?;
        h = reduce_xpoly_mod(&h.add(&es).add(&qh), &vk)?;
        if k >= prec {
            break;
        }
        // Lift the Bezout pair: b = s g + t h - 1.
        let b = reduce_xpoly_mod(
            &s.mul(&g).add(&t.mul(&h)).sub(&XPolyOverA::new(
                &field,
                vec![FqPoly::one(&field, Var::T)],
            )),
            &vk,
        )?;
        let sb = reduce_xpoly_mod(&s.mul(&b), &vk)?;
        let (c, d) = divrem_mod(&sb, &h, &vk)?;
        s = reduce_xpoly_mod(&s.sub(&d), &vk)?;
        let tb = reduce_xpoly_mod(&t.mul(&b), &vk)?;
        let cg = reduce_xpoly_mod(&c.mul(&g), &vk)?;
        t = reduce_xpoly_mod(&t.sub(&tb).sub(&cg), &vk)?;
    }
    Ok((g, h))
}

fn bezout(g: &FqPoly, h: &FqPoly) -> Result<(FqPoly, FqPoly)> {
    // Extended Euclid over the residue field.
    let field = g.field().clone();
    let var = g.var();
    let mut r0 = g.clone();
    let mut r1 = h.clone();
    let mut s0 = FqPoly::one(&field, var);
    let mut s1 = FqPoly::zero(&field, var);
    let mut t0 = FqPoly::zero(&field, var);
    let mut t1 = FqPoly::one(&field, var);
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1)?;
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    if r0.degree() != Some(0) {
        return Err(GaloisError::ZeroInput);
    }
    let c = r0.coeff(0).inv()?;
    Ok((s0.scale(&c), t0.scale(&c)))
}

/// Interpret a residue-field x-polynomial as an A[x] polynomial with
/// coefficients the canonical representatives.
fn lift_poly(field: &Fq, ctx: &ResidueCtx, g: &FqPoly) -> XPolyOverA {
    let coeffs = g
        .coeffs()
        .iter()
        .map(|c| {
            if ctx.v.degree() == Some(1) {
                FqPoly::constant(field, Var::T, c.clone())
            } else {
                let rep: Vec<i64> = c.rep().iter().map(|&x| x as i64).collect();
                FqPoly::from_ints(field, Var::T, &rep)
            }
        })
        .collect();
    XPolyOverA::new(field, coeffs)
}

fn reduce_xpoly_mod(f: &XPolyOverA, vk: &FqPoly) -> Result<XPolyOverA> {
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| Ok(c.rem(vk)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(XPolyOverA::new(f.field(), coeffs))
}

/// Division with remainder mod v^k by a polynomial whose leading
/// coefficient is a unit mod v (monic-by-construction splits).
fn divrem_mod(
    num: &XPolyOverA,
    den: &XPolyOverA,
    vk: &FqPoly,
) -> Result<(XPolyOverA, XPolyOverA)> {
    let field = num.field().clone();
    let dd = den.degree().ok_or(GaloisError::ZeroInput)?;
    let lead = den.coeff(dd);
    let lead_inv = invert_mod_vpow(&lead, vk)?;
    let mut rem: Vec<FqPoly> = num.coeffs().to_vec();
    let mut quot = vec![FqPoly::zero(&field, Var::T); rem.len().saturating_sub(dd)];
    while rem.len() > dd {
        let k = rem.len() - 1;
        let c = rem[k].mul(&lead_inv).rem(vk)?;
        if !c.is_zero() {
            let shift = k - dd;
            quot[shift] = c.clone();
            for (i, dc) in den.coeffs().iter().enumerate() {
                rem[shift + i] = rem[shift + i].sub(&dc.mul(&c)).rem(vk)?;
            }
        }
        rem.pop();
    }
    Ok((
        XPolyOverA::new(&field, quot),
        XPolyOverA::new(&field, rem),
    ))
}

/// Inverse of u mod v^k (u a unit mod v) by Newton lifting.
fn invert_mod_vpow(u: &FqPoly, vk: &FqPoly) -> Result<FqPoly> {
    // Extended Euclid of u against v^k directly (sizes are small).
    let field = u.field().clone();
    let var = u.var();
    let mut r0 = u.rem(vk)?;
    let mut r1 = vk.clone();
    let mut s0 = FqPoly::one(&field, var);
    let mut s1 = FqPoly::zero(&field, var);
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1)?;
        let s = s0.sub(&q.mul(&s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.degree() != Some(0) {
        return Err(GaloisError::ZeroInput);
    }
    Ok(s0.scale(&r0.coeff(0).inv()?).rem(vk)?)
}

fn mul_mod_vpow(a: &XPolyOverA, b: &XPolyOverA, v: &FqPoly, prec: usize) -> XPolyOverA {
    let vk = v.pow_charp(prec as u64);
    reduce_xpoly_mod(&a.mul(b), &vk).expect("nonzero modulus")
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
