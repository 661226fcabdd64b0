//! Hasse-Schmidt hyperderivatives on A = F_q[T] and their extensions.
//!
//! D_j acts on monomials by D_j T^n = binom(n, j) T^(n-j) and extends
//! linearly; D_0 is the identity and the family satisfies the Leibniz
//! convolution D_n(uv) = sum D_i(u) D_(n-i)(v). The composite operators
//! D_mu and the char-p multinomials M_mu^j(m) assemble the power formula
//! for D_n(f^m), which also yields the v-adic continuity bound
//! D_n(c f^m) = 0 mod f^(m-n).

pub mod extend;
pub mod partition;

pub use extend::extend_derivation;
pub use partition::{multinomial_charp, partitions, Partition};

use algebra_core::{AlgebraError, FqElem, FqPoly};
use local_series::{PadicInt, SeriesError, ValSeries};

/// D_j(f) by the monomial rule, binomials via Lucas.
pub fn hyperderive(j: u64, f: &FqPoly) -> FqPoly {
    if j == 0 {
        return f.clone();
    }
    let field = f.field().clone();
    let p = field.p();
    let mut coeffs = Vec::new();
    for (n, c) in f.coeffs().iter().enumerate() {
        let n = n as u64;
        if n < j || c.is_zero() {
            continue;
        }
        let b = PadicInt::exact(p, n as i64)
            .binom_mod_p(j)
            .expect("exact exponent");
        if b != 0 {
            let idx = (n - j) as usize;
            if coeffs.len() <= idx {
                coeffs.resize(idx + 1, field.zero());
            }
            coeffs[idx] = coeffs[idx].add(&c.mul(&field.from_int(b as i64)));
        }
    }
    FqPoly::new(&field, f.var(), coeffs)
}

/// D_j on a series at the place at infinity: term a_k T^(-e) maps to
/// binom(-e, j) a_k T^(-e-j), which shifts the valuation by j and keeps
/// the relative precision.
pub fn hyperderive_series(j: u64, x: &ValSeries) -> Result<ValSeries, SeriesError> {
    if !x.completion().is_infinity() {
        return Err(SeriesError::Precision(
            "series hyperderivatives are implemented at the infinite place".into(),
        ));
    }
    if j == 0 || x.is_apparent_zero() {
        return Ok(x.shift(j as i64));
    }
    let comp = x.completion().clone();
    let res = comp.residue_field().clone();
    let p = res.p();
    let val = x.val_floor();
    let coeffs: Vec<FqElem> = x
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            // pi-exponent val + k is T-exponent -(val + k).
            let n = -(val + k as i64);
            let b = PadicInt::exact(p, n).binom_mod_p(j).expect("exact exponent");
            a.mul(&res.from_int(b as i64))
        })
        .collect();
    Ok(ValSeries::new(comp, val + j as i64, coeffs))
}

/// Exact verification of the Leibniz identity D_n(uv) = sum_i D_i(u) D_(n-i)(v).
pub fn leibniz_check(n: u64, u: &FqPoly, v: &FqPoly) -> bool {
    let lhs = hyperderive(n, &u.mul(v));
    let mut rhs = FqPoly::zero(u.field(), u.var());
    for i in 0..=n {
        rhs = rhs.add(&hyperderive(i, u).mul(&hyperderive(n - i, v)));
    }
    lhs == rhs
}

/// D_mu(f) = prod_i D_i(f)^(mu_i) for mu in P(n, j).
pub fn d_mu(f: &FqPoly, mu: &Partition) -> FqPoly {
    let mut acc = FqPoly::one(f.field(), f.var());
    for (i, &e) in mu.parts.iter().enumerate() {
        if e > 0 {
            acc = acc.mul(&hyperderive((i + 1) as u64, f).pow_charp(e as u64));
        }
    }
    acc
}

/// The right-hand side of the power formula:
/// sum_(j=1..n) f^(m-j) sum_(mu in P(n,j)) M_mu^j(m) D_mu(f).
pub fn power_formula(f: &FqPoly, m: u64, n: u64) -> Result<FqPoly, AlgebraError> {
    if m < 1 {
        return Err(AlgebraError::ZeroInput("power formula needs m >= 1"));
    }
    let field = f.field().clone();
    let mut acc = FqPoly::zero(&field, f.var());
    for j in 1..=n.min(m) {
        let mut inner = FqPoly::zero(&field, f.var());
        for mu in partitions(n as usize, j as usize) {
            let coeff = multinomial_charp(m, &mu, field.p());
            if coeff != 0 {
                inner = inner.add(&d_mu(f, &mu).scale(&field.from_int(coeff as i64)));
            }
        }
        if !inner.is_zero() {
            acc = acc.add(&f.pow_charp(m - j).mul(&inner));
        }
    }
    Ok(acc)
}

/// Verdict of the divisibility bound f^(m-n) | D_n(c f^m).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContinuityVerdict {
    Holds,
    Fails,
    /// m <= n: nothing to check.
    Vacuous,
}

/// Check D_n(c f^m) = 0 mod f^(m-n) exactly.
pub fn vadic_continuity_bound(n: u64, c: &FqPoly, f: &FqPoly, m: u64) -> ContinuityVerdict {
    if m <= n {
        return ContinuityVerdict::Vacuous;
    }
    let g = c.mul(&f.pow_charp(m));
    let dn = hyperderive(n, &g);
    let modulus = f.pow_charp(m - n);
    if dn.divides_exactly(&modulus) {
        ContinuityVerdict::Holds
    } else {
        ContinuityVerdict::Fails
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use algebra_core::{DetRng, Fq, FqPoly, Var};

    fn f(p: u64) -> Fq {
        Fq::prime(p).unwrap()
    }

    /// Independent oracle: expand f^m by repeated multiplication, then
    /// differentiate by the monomial rule with integer binomials reduced
    /// mod p (no Lucas, no formula).
    fn hyperderive_oracle(j: u64, f: &FqPoly) -> FqPoly {
        let field = f.field().clone();
        let mut coeffs = Vec::new();
        for (n, c) in f.coeffs().iter().enumerate() {
            let n = n as u64;
            if n < j || c.is_zero() {
                continue;
            }
            // binom(n, j) by Pascal's rule in u128 reduced at the end.
            let mut b = 1u128;
            for i in 0..j {
                b = b * (n - i) as u128;
            }
            let mut fact = 1u128;
            for i in 1..=j {
                fact *= i as u128;
            }
            let bmod = ((b / fact) % field.p() as u128) as i64;
            let idx = (n - j) as usize;
            if coeffs.len() <= idx {
                coeffs.resize(idx + 1, field.zero());
            }
            coeffs[idx] = coeffs[idx].add(&c.mul(&field.from_int(bmod)));
        }
        FqPoly::new(&field, f.var(), coeffs)
    }

    #[test]
    fn monomial_rule_instances() {
        let f5 = f(5);
        // D_1(T^3) = 3 T^2
        let t3 = FqPoly::from_ints(&f5, Var::T, &[0, 0, 0, 1]);
        assert_eq!(hyperderive(1, &t3), FqPoly::from_ints(&f5, Var::T, &[0, 0, 3]));
        // D_2(T^5) = binom(5,2) T^3 = 10 T^3 = 0 over F_5
        let t5 = FqPoly::from_ints(&f5, Var::T, &[0, 0, 0, 0, 0, 1]);
        assert!(hyperderive(2, &t5).is_zero());
        // D_3(T^4 + T) = 0 over F_2
        let f2 = f(2);
        let g = FqPoly::from_ints(&f2, Var::T, &[0, 1, 0, 0, 1]);
        assert!(hyperderive(3, &g).is_zero());
    }

    #[test]
    fn matches_oracle_on_random_inputs() {
        for p in [2u64, 3, 5] {
            let field = f(p);
            let mut rng = DetRng::new(p);
            for _ in 0..100 {
                let deg = rng.next_below(12) as usize;
                let coeffs: Vec<i64> = (0..=deg).map(|_| rng.next_below(p) as i64).collect();
                let a = FqPoly::from_ints(&field, Var::T, &coeffs);
                for j in 0..8 {
                    assert_eq!(hyperderive(j, &a), hyperderive_oracle(j, &a));
                }
            }
        }
    }

    #[test]
    fn leibniz_trivial_and_random() {
        let f3 = f(3);
        let t = FqPoly::gen(&f3, Var::T);
        assert!(leibniz_check(0, &t, &t));
        assert!(leibniz_check(1, &t, &t));
        for p in [2u64, 3, 5] {
            let field = f(p);
            let mut rng = DetRng::new(p + 77);
            for _ in 0..60 {
                let mk = |rng: &mut DetRng| {
                    let deg = rng.next_below(10) as usize;
                    let coeffs: Vec<i64> =
                        (0..=deg).map(|_| rng.next_below(p) as i64).collect();
                    FqPoly::from_ints(&field, Var::T, &coeffs)
                };
                let u = mk(&mut rng);
                let v = mk(&mut rng);
                for n in 0..=6 {
                    assert!(leibniz_check(n, &u, &v), "p={p} n={n}");
                }
            }
        }
    }

    #[test]
    fn composition_rule_on_monomials() {
        // D_i D_j = binom(i+j, i) D_(i+j) on monomials of degree <= 12.
        for p in [2u64, 3, 5] {
            let field = f(p);
            for deg in 0..=12usize {
                let mono = FqPoly::monomial(&field, Var::T, field.one(), deg);
                for i in 0..=6u64 {
                    for j in 0..=6u64 {
                        let lhs = hyperderive(i, &hyperderive(j, &mono));
                        let b = PadicInt::exact(p, (i + j) as i64).binom_mod_p(i).unwrap();
                        let rhs =
                            hyperderive(i + j, &mono).scale(&field.from_int(b as i64));
                        assert_eq!(lhs, rhs, "p={p} deg={deg} i={i} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn power_formula_grid() {
        // The stated grid: f deg <= 4, m <= 5, n <= 6, r in {2,3,5},
        // against the direct expansion oracle.
        let mut total = 0;
        for p in [2u64, 3, 5] {
            let field = f(p);
            let mut rng = DetRng::new(p * 3 + 1);
            for _ in 0..60 {
                let deg = rng.next_below(5) as usize;
                let coeffs: Vec<i64> = (0..=deg).map(|_| rng.next_below(p) as i64).collect();
                let a = FqPoly::from_ints(&field, Var::T, &coeffs);
                if a.is_zero() {
                    continue;
                }
                for m in 1..=5u64 {
                    for n in 1..=6u64 {
                        let direct = hyperderive_oracle(n, &a.pow_repeated_squaring(m));
                        let formula = power_formula(&a, m, n).unwrap();
                        assert_eq!(formula, direct, "p={p} m={m} n={n} a={a}");
                        total += 1;
                    }
                }
            }
        }
        assert!(total >= 500, "grid too small: {total}");
    }

    #[test]
    fn power_formula_chain_rule_case() {
        // n = 1: m f^(m-1) D_1(f); and D_2(T^4) = 6 T^2 = 0 over F_3.
        let f3 = f(3);
        let t = FqPoly::gen(&f3, Var::T);
        let lhs = power_formula(&t, 4, 2).unwrap();
        assert!(lhs.is_zero());
        let g = FqPoly::from_ints(&f3, Var::T, &[1, 2, 1]);
        let n1 = power_formula(&g, 3, 1).unwrap();
        let expect = g
            .pow_charp(2)
            .mul(&hyperderive(1, &g))
            .scale(&f3.from_int(3));
        assert_eq!(n1, expect); // both vanish: m = 3 = 0 mod 3
    }

    #[test]
    fn continuity_bound_cases() {
        let f3 = f(3);
        let t = FqPoly::gen(&f3, Var::T);
        let one = FqPoly::one(&f3, Var::T);
        // D_2(T^5) = T^3, divisible by T^3.
        assert_eq!(vadic_continuity_bound(2, &one, &t, 5), ContinuityVerdict::Holds);
        assert_eq!(vadic_continuity_bound(5, &one, &t, 3), ContinuityVerdict::Vacuous);
        // Randomized grid: c random, f irreducible deg <= 3, m <= 8, n < m.
        for p in [2u64, 3, 5] {
            let field = f(p);
            let mut rng = DetRng::new(p + 5);
            let irreds: Vec<FqPoly> = (1..=3)
                .flat_map(|d| algebra_core::monic_irreducibles(&field, Var::T, d))
                .collect();
            let mut tight_seen = false;
            for _ in 0..40 {
                let fpoly = &irreds[rng.next_below(irreds.len() as u64) as usize];
                let cdeg = rng.next_below(4) as usize;
                let c = FqPoly::from_ints(
                    &field,
                    Var::T,
                    &(0..=cdeg).map(|_| rng.next_below(p) as i64).collect::<Vec<_>>(),
                );
                if c.is_zero() {
                    continue;
                }
                let m = 2 + rng.next_below(7);
                let n = rng.next_below(m);
                assert_eq!(
                    vadic_continuity_bound(n, &c, fpoly, m),
                    ContinuityVerdict::Holds,
                    "p={p} f={fpoly} m={m} n={n}"
                );
                // Record (not assert) whether the exponent m-n is tight.
                if n > 0 && m > n {
                    let g = c.mul(&fpoly.pow_charp(m));
                    let dn = hyperderive(n, &g);
                    if !dn.is_zero() && !dn.divides_exactly(&fpoly.pow_charp(m - n + 1)) {
                        tight_seen = true;
                    }
                }
            }
            assert!(tight_seen, "bound never tight for p={p}, suspicious");
        }
    }

    #[test]
    fn series_hyperderivative_matches_polynomial_case() {
        use local_series::Completion;
        let f5 = f(5);
        let k = Completion::infinity(&f5);
        let a = FqPoly::from_ints(&f5, Var::T, &[2, 1, 0, 3]);
        for j in 0..5u64 {
            let lhs = hyperderive_series(j, &k.embed_poly(&a, 20).unwrap()).unwrap();
            let rhs = k.embed_poly(&hyperderive(j, &a), 14).unwrap();
            assert!(
                lhs.agrees_to(&rhs, 10),
                "j={j}: {lhs} vs {rhs}"
            );
        }
        // D_1(1/T) = -1/T^2.
        let inv_t = k.uniformizer_pow(1, 10);
        let d = hyperderive_series(1, &inv_t).unwrap();
        assert_eq!(d.valuation(), Some(2));
        assert_eq!(d.digit(2), f5.from_int(-1));
    }
}
