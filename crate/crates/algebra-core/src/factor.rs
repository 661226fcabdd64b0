//! Polynomial factorization over finite fields.
//!
//! Squarefree decomposition (with the char-p p-th-power descent), then
//! distinct-degree splitting via x^(q^i) - x, then Cantor-Zassenhaus
//! equal-degree splitting. Odd characteristic uses the (q^d-1)/2 power
//! test; characteristic 2 uses trace polynomials. The equal-degree stage
//! draws from an explicit deterministic generator so runs reproduce.

use crate::error::{AlgebraError, Result};
use crate::field::Fq;
use crate::poly::{FqPoly, Var};
use crate::rng::DetRng;

/// Irreducibility test for a raw F_p modulus (little-endian, monic).
/// Used while bootstrapping extension-field descriptors.
pub(crate) fn prime_modulus_irreducible(p: u64, modulus: &[u64]) -> bool {
    let field = match Fq::prime(p) {
        Ok(f) => f,
        Err(_) => return false,
    };
    let poly = FqPoly::from_ints(
        &field,
        Var('x'),
        &modulus.iter().map(|&c| c as i64).collect::<Vec<_>>(),
    );
    irreducible_test(&poly).unwrap_or(false)
}

/// True iff `a` is irreducible over its coefficient field.
///
/// Rabin's criterion: x^(q^n) = x mod a, and gcd(x^(q^(n/l)) - x, a) = 1
/// for every prime l dividing n.
pub fn irreducible_test(a: &FqPoly) -> Result<bool> {
    let n = match a.degree() {
        None | Some(0) => return Err(AlgebraError::ConstantInput),
        Some(n) => n,
    };
    if n == 1 {
        return Ok(true);
    }
    if a.coeff(0).is_zero() {
        // Divisible by the indeterminate.
        return Ok(false);
    }
    let field = a.field();
    let x = FqPoly::gen(field, a.var());
    // Iterated q-power endomorphism of F_q[x]/(a) applied to x.
    let mut t = frobenius_q_mod(&x, a)?;
    let mut powers = vec![x.clone(), t.clone()]; // powers[i] = x^(q^i) mod a
    for _ in 1..n {
        t = frobenius_q_mod(&t, a)?;
        powers.push(t.clone());
    }
    if powers[n] != x.rem(a)? {
        return Ok(false);
    }
    for l in prime_divisors(n as u64) {
        let k = n / l as usize;
        let diff = powers[k].sub(&x);
        if diff.is_zero() {
            return Ok(false);
        }
        let g = diff.gcd(a)?;
        if g.degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// t^q mod a, computed as q = p^m successive p-th powers with reduction.
fn frobenius_q_mod(t: &FqPoly, a: &FqPoly) -> Result<FqPoly> {
    let p = t.field().p();
    let m = t.field().m();
    let mut acc = t.rem(a)?;
    for _ in 0..m {
        acc = acc.powmod(p, a)?;
    }
    Ok(acc)
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// A factorization into monic irreducibles with multiplicities, plus the
/// unit (leading coefficient of the input).
#[derive(Clone, Debug)]
pub struct Factorization {
    pub unit: crate::field::FqElem,
    pub factors: Vec<(FqPoly, usize)>,
}

impl Factorization {
    /// Multiply the factorization back together.
    pub fn expand(&self) -> FqPoly {
        let field = self.unit.field().clone();
        let var = self
            .factors
            .first()
            .map(|(f, _)| f.var())
            .unwrap_or(Var::T);
        let mut acc = FqPoly::constant(&field, var, self.unit.clone());
        for (f, e) in &self.factors {
            for _ in 0..*e {
                acc = acc.mul(f);
            }
        }
        acc
    }
}

/// Full factorization into monic irreducibles. Deterministic given the rng.
pub fn poly_factor(a: &FqPoly, rng: &mut DetRng) -> Result<Factorization> {
    if a.is_zero() {
        return Err(AlgebraError::ZeroInput("factorization"));
    }
    let unit = a.leading_coeff().unwrap().clone();
    let monic = a.clone().into_monic();
    let mut factors: Vec<(FqPoly, usize)> = Vec::new();
    for (g, mult) in squarefree_decomposition(&monic)? {
        for (h, d) in distinct_degree_split(&g)? {
            for irred in equal_degree_split(&h, d, rng)? {
                factors.push((irred, mult));
            }
        }
    }
    factors.sort_by(|(f, _), (g, _)| {
        f.degree()
            .cmp(&g.degree())
            .then_with(|| cmp_coeff_lex(f, g))
    });
    Ok(Factorization { unit, factors })
}

fn cmp_coeff_lex(f: &FqPoly, g: &FqPoly) -> std::cmp::Ordering {
    for i in (0..f.coeffs().len().max(g.coeffs().len())).rev() {
        let a = f.coeff(i);
        let b = g.coeff(i);
        let ord = a.rep().cmp(b.rep());
        if ord != std::cmp::Ordering::Equal {
            return ord;
        }
    }
    std::cmp::Ordering::Equal
}

/// Yun-style squarefree decomposition adapted to characteristic p: returns
/// pairs (squarefree part, multiplicity) with product g^m equal to the
/// monic input. When the derivative vanishes the input is a p-th power and
/// the decomposition recurses on its p-th root.
pub fn squarefree_decomposition(a: &FqPoly) -> Result<Vec<(FqPoly, usize)>> {
    let p = a.field().p() as usize;
    let mut out: Vec<(FqPoly, usize)> = Vec::new();
    let mut stack = vec![(a.clone(), 1usize)];
    while let Some((f, scale)) = stack.pop() {
        if f.degree() == Some(0) {
            continue;
        }
        let df = f.formal_derivative();
        if df.is_zero() {
            // f = g(x^p); recurse on the p-th root with multiplicities * p.
            let root = f.pth_root_spread()?;
            stack.push((root, scale * p));
            continue;
        }
        let mut c = f.gcd(&df)?;
        let mut w = f.divrem(&c)?.0;
        let mut i = 1usize;
        while w.degree() != Some(0) {
            let y = w.gcd(&c)?;
            let fac = w.divrem(&y)?.0;
            if fac.degree() != Some(0) {
                out.push((fac, i * scale));
            }
            w = y;
            c = c.divrem(&w)?.0;
            i += 1;
        }
        if c.degree() != Some(0) {
            // Remaining part is a p-th power.
            stack.push((c.pth_root_spread()?, scale * p));
        }
    }
    out.sort_by_key(|(_, m)| *m);
    // Merge equal multiplicities produced by different branches.
    let mut merged: Vec<(FqPoly, usize)> = Vec::new();
    for (g, m) in out {
        if let Some(last) = merged.last_mut() {
            if last.1 == m {
                last.0 = last.0.mul(&g);
                continue;
            }
        }
        merged.push((g, m));
    }
    Ok(merged)
}

/// Split a squarefree monic polynomial into products of irreducibles of
/// equal degree: returns (product, degree) pairs.
pub fn distinct_degree_split(a: &FqPoly) -> Result<Vec<(FqPoly, usize)>> {
    let mut out = Vec::new();
    let mut f = a.clone();
    let x = FqPoly::gen(a.field(), a.var());
    let mut h = x.rem(&f)?;
    let mut d = 0usize;
    while f.degree().map_or(false, |n| n >= 2 * (d + 1)) {
        d += 1;
        h = frobenius_q_mod(&h, &f)?;
        let g = h.sub(&x).gcd(&f)?;
        if g.degree() != Some(0) {
            f = f.divrem(&g)?.0;
            h = h.rem(&f)?;
            out.push((g, d));
        }
    }
    if f.degree().map_or(false, |n| n > 0) {
        let n = f.degree().unwrap();
        out.push((f, n));
    }
    Ok(out)
}

/// Cantor-Zassenhaus equal-degree splitting of a product of irreducibles
/// all of degree d.
pub fn equal_degree_split(a: &FqPoly, d: usize, rng: &mut DetRng) -> Result<Vec<FqPoly>> {
    let n = a.degree().unwrap_or(0);
    if n == d {
        return Ok(vec![a.clone()]);
    }
    let field = a.field().clone();
    let q = field.order();
    let mut todo = vec![a.clone()];
    let mut done = Vec::new();
    while let Some(f) = todo.pop() {
        if f.degree() == Some(d) {
            done.push(f);
            continue;
        }
        let g = loop {
            let r = random_poly(&field, f.var(), f.degree().unwrap() - 1, rng);
            if r.degree().map_or(true, |dr| dr < 1) && d > 0 && f.degree().unwrap() > d {
                continue;
            }
            let split = if q % 2 == 1 {
                // r^((q^d-1)/2) - 1 separates roots by quadratic character.
                let e = (pow_u128(q, d as u32) - 1) / 2;
                let t = powmod_u128(&r, e, &f)?;
                t.sub(&FqPoly::one(&field, f.var()))
            } else {
                // Trace polynomial r + r^2 + r^4 + ... over F_2-linear span.
                let m = field.m() as usize * d;
                let mut t = r.clone().rem(&f)?;
                let mut acc = t.clone();
                for _ in 1..m {
                    t = t.powmod(2, &f)?;
                    acc = acc.add(&t);
                }
                acc
            };
            if split.is_zero() {
                continue;
            }
            let g = split.gcd(&f)?;
            let dg = g.degree().unwrap_or(0);
            if dg != 0 && dg != f.degree().unwrap() {
                break g;
            }
        };
        let h = f.divrem(&g)?.0;
        todo.push(g);
        todo.push(h);
    }
    Ok(done)
}

fn pow_u128(q: u64, d: u32) -> u128 {
    (q as u128).pow(d)
}

fn powmod_u128(base: &FqPoly, mut e: u128, m: &FqPoly) -> Result<FqPoly> {
    let mut b = base.rem(m)?;
    let mut acc = FqPoly::one(base.field(), base.var());
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&b).rem(m)?;
        }
        e >>= 1;
        if e > 0 {
            b = b.mul(&b).rem(m)?;
        }
    }
    Ok(acc)
}

fn random_poly(field: &Fq, var: Var, max_deg: usize, rng: &mut DetRng) -> FqPoly {
    let q = field.order();
    let coeffs: Vec<_> = (0..=max_deg)
        .map(|_| field.element_at(rng.next_below(q)))
        .collect();
    FqPoly::new(field, var, coeffs)
}

/// All roots of `a` in its coefficient field, by exhaustive evaluation.
/// The fields in play are tiny; this doubles as an independent oracle.
pub fn roots_by_search(a: &FqPoly) -> Vec<crate::field::FqElem> {
    a.field()
        .elements()
        .filter(|x| a.eval(x).is_zero())
        .collect()
}

/// Enumerate monic irreducible polynomials of exactly the given degree.
pub fn monic_irreducibles(field: &Fq, var: Var, degree: usize) -> Vec<FqPoly> {
    crate::poly::MonicIter::new(field, var, degree)
        .filter(|f| degree == 1 || irreducible_test(f).unwrap_or(false))
        .collect()
}
