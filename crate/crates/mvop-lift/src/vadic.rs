//! The v-adic lifting theorem, computationally: the same Newton engine
//! over the truncated quotient ring (A_v/v^M)[u]/(f-bar). Inverting a unit
//! goes through the residue extension field A/v[u]/(f mod v) followed by
//! Newton lifting, so separability must hold with a unit margin (f'(λ)
//! invertible mod v). The hyperderivative continuity bound charges the
//! output t - 1 powers of v relative to the input precision.

use crate::error::{LiftError, Result};
use crate::lift::{eval_g, newton_lift, LiftProblem};
use crate::tangent::TangentElt;
use algebra_core::{FqElem, FqPoly, Var};
use carlitz_modules::TauScalar;
use hyperderiv::hyperderive;
use local_series::{Completion, ValSeries};
use std::sync::Arc;

#[derive(Debug)]
pub struct VadicExtInner {
    comp: Completion,
    /// Monic minimal polynomial in u, coefficients as v-adic series.
    minpoly: Vec<ValSeries>,
    /// The same polynomial reduced mod v, over the residue field.
    minpoly_res: FqPoly,
    prec: usize,
}

/// The quotient ring (A_v/v^prec)[u]/(f), a local ring with residue field
/// (A/v)[u]/(f mod v).
#[derive(Clone, Debug)]
pub struct VadicExt {
    inner: Arc<VadicExtInner>,
}

impl PartialEq for VadicExt {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }
}
impl Eq for VadicExt {}

impl VadicExt {
    /// Build from the scalar minimal polynomial (monic, coefficients
    /// embedded v-adically at the stated precision). Requires the
    /// reduction mod v to stay separable (unit discriminant margin).
    pub fn new(comp: &Completion, minpoly: Vec<ValSeries>, prec: usize) -> Result<VadicExt> {
        let deg = minpoly.len() - 1;
        if deg == 0 {
            return Err(LiftError::DegenerateProblem);
        }
        let res_field = comp.residue_field().clone();
        let res_coeffs: Vec<FqElem> = minpoly.iter().map(|c| c.digit(0)).collect();
        let minpoly_res = FqPoly::new(&res_field, Var::U, res_coeffs);
        if minpoly_res.degree() != Some(deg) {
            return Err(LiftError::DegenerateProblem);
        }
        let dres = minpoly_res.formal_derivative();
        if dres.is_zero() || minpoly_res.gcd(&dres)?.degree() != Some(0) {
            return Err(LiftError::NotSeparableAtPrecision);
        }
        Ok(VadicExt {
            inner: Arc::new(VadicExtInner {
                comp: comp.clone(),
                minpoly,
                minpoly_res,
                prec,
            }),
        })
    }

    pub fn completion(&self) -> &Completion {
        &self.inner.comp
    }

    pub fn degree(&self) -> usize {
        self.inner.minpoly.len() - 1
    }

    pub fn prec(&self) -> usize {
        self.inner.prec
    }

    pub fn zero(&self) -> VadicExtElt {
        let z = self.inner.comp.zero(self.inner.prec as i64);
        VadicExtElt {
            ctx: self.clone(),
            rep: vec![z; self.degree()],
        }
    }

    pub fn one(&self) -> VadicExtElt {
        let mut e = self.zero();
        e.rep[0] = self.inner.comp.one(self.inner.prec);
        e
    }

    pub fn generator(&self) -> VadicExtElt {
        let mut e = self.zero();
        if self.degree() > 1 {
            e.rep[1] = self.inner.comp.one(self.inner.prec);
        } else {
            e.rep[0] = self.inner.minpoly[0].neg();
        }
        e
    }

    pub fn from_series(&self, s: ValSeries) -> VadicExtElt {
        let mut e = self.zero();
        e.rep[0] = s.truncate_abs(self.inner.prec as i64);
        e
    }

    /// Reduce a u-polynomial with series coefficients by the monic
    /// minimal polynomial.
    pub fn reduce(&self, mut rep: Vec<ValSeries>) -> VadicExtElt {
        let deg = self.degree();
        let f = &self.inner.minpoly;
        while rep.len() > deg {
            let top = rep.pop().unwrap();
            if top.is_apparent_zero() {
                continue;
            }
            let shift = rep.len() - deg;
            for i in 0..deg {
                rep[shift + i] = rep[shift + i]
                    .sub(&top.mul(&f[i]).expect("same place"))
                    .expect("same place");
            }
        }
        let prec = self.inner.prec as i64;
        rep.resize(deg, self.inner.comp.zero(prec));
        let rep = rep.into_iter().map(|c| c.truncate_abs(prec)).collect();
        VadicExtElt {
            ctx: self.clone(),
            rep,
        }
    }

    fn from_poly_residue(&self, g: &FqPoly) -> VadicExtElt {
        let comp = &self.inner.comp;
        let mut e = self.zero();
        for (i, c) in g.coeffs().iter().enumerate().take(self.degree()) {
            e.rep[i] = comp.from_residue(c.clone(), self.inner.prec);
        }
        e
    }
}

/// An element of the v-adic quotient ring.
#[derive(Clone, Debug)]
pub struct VadicExtElt {
    ctx: VadicExt,
    rep: Vec<ValSeries>,
}

impl PartialEq for VadicExtElt {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.rep.iter().zip(&other.rep).all(|(a, b)| a == b)
    }
}

impl VadicExtElt {
    pub fn rep(&self) -> &[ValSeries] {
        &self.rep
    }

    pub fn ctx(&self) -> &VadicExt {
        &self.ctx
    }

    /// Residue-field image (u-polynomial over A/v).
    fn residue(&self) -> FqPoly {
        let field = self.ctx.inner.comp.residue_field().clone();
        let coeffs: Vec<FqElem> = self.rep.iter().map(|c| c.digit(0)).collect();
        FqPoly::new(&field, Var::U, coeffs)
    }

    /// Minimum coefficient valuation (apparent zeros count as their
    /// precision).
    pub fn valuation_floor(&self) -> i64 {
        self.rep
            .iter()
            .map(|c| c.valuation().unwrap_or_else(|| c.abs_prec()))
            .min()
            .unwrap()
    }
}

impl TauScalar for VadicExtElt {
    fn zero_like(&self) -> Self {
        self.ctx.zero()
    }
    fn one_like(&self) -> Self {
        self.ctx.one()
    }
    fn is_zero(&self) -> bool {
        self.rep.iter().all(|c| c.is_apparent_zero())
    }
    fn add(&self, other: &Self) -> Self {
        assert!(self.ctx == other.ctx);
        VadicExtElt {
            ctx: self.ctx.clone(),
            rep: self
                .rep
                .iter()
                .zip(&other.rep)
                .map(|(a, b)| a.add(b).expect("same place"))
                .collect(),
        }
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        assert!(self.ctx == other.ctx);
        let deg = self.ctx.degree();
        let comp = &self.ctx.inner.comp;
        let prec = self.ctx.inner.prec as i64;
        let mut conv = vec![comp.zero(prec); 2 * deg - 1];
        for (i, a) in self.rep.iter().enumerate() {
            if a.is_apparent_zero() {
                continue;
            }
            for (j, b) in other.rep.iter().enumerate() {
                conv[i + j] = conv[i + j]
                    .add(&a.mul(b).expect("same place"))
                    .expect("same place");
            }
        }
        self.ctx.reduce(conv)
    }
    fn neg(&self) -> Self {
        VadicExtElt {
            ctx: self.ctx.clone(),
            rep: self.rep.iter().map(|c| c.neg()).collect(),
        }
    }
    fn inv(&self) -> Option<Self> {
        // Invert in the residue extension field, then Newton-lift
        // x <- x(2 - a x) to the working precision.
        let res = self.residue();
        if res.is_zero() {
            return None;
        }
        let fbar = &self.ctx.inner.minpoly_res;
        let inv_res = invert_mod(&res, fbar)?;
        let mut x = self.ctx.from_poly_residue(&inv_res);
        let two = self.ctx.one().add(&self.ctx.one());
        let steps = (usize::BITS - self.ctx.inner.prec.leading_zeros()) as usize + 1;
        for _ in 0..steps {
            let ax = self.mul(&x);
            x = x.mul(&two.sub(&ax));
        }
        Some(x)
    }
    fn frobenius_q(&self, k: u32) -> Self {
        let q = self.ctx.inner.comp.base().order();
        let mut acc = self.clone();
        for _ in 0..k {
            let mut out = self.ctx.one();
            let mut base = acc.clone();
            let mut e = q;
            while e > 0 {
                if e & 1 == 1 {
                    out = out.mul(&base);
                }
                e >>= 1;
                if e > 0 {
                    base = base.mul(&base);
                }
            }
            acc = out;
        }
        acc
    }
    fn from_const(&self, c: &algebra_core::FqElem) -> Self {
        let poly = FqPoly::constant(self.ctx.inner.comp.base(), Var::T, c.clone());
        let s = self
            .ctx
            .inner
            .comp
            .embed_poly(&poly, self.ctx.inner.prec)
            .expect("constant embeds");
        self.ctx.from_series(s)
    }
}

/// Extended-Euclid inverse of `a` modulo the (irreducible) residue minimal
/// polynomial, over the residue field.
fn invert_mod(a: &FqPoly, f: &FqPoly) -> Option<FqPoly> {
    let field = a.field().clone();
    let var = a.var();
    let mut r0 = a.rem(f).ok()?;
    let mut r1 = f.clone();
    let mut s0 = FqPoly::one(&field, var);
    let mut s1 = FqPoly::zero(&field, var);
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1).ok()?;
        let s = s0.sub(&q.mul(&s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.degree() != Some(0) {
        return None;
    }
    let c = r0.coeff(0).inv().ok()?;
    s0.scale(&c).rem(f).ok()
}

fn tangents_in_ctx(
    problem: &LiftProblem,
    ctx: &VadicExt,
    comp: &Completion,
    prec: usize,
) -> Result<Vec<TangentElt<VadicExtElt>>> {
    let t = problem.t;
    problem
        .coeffs
        .iter()
        .map(|a| {
            let coeffs = (0..t)
                .map(|j| {
                    let d = hyperderive(j as u64, a);
                    Ok(ctx.from_series(comp.embed_poly(&d, prec)?))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(TangentElt::new(t, coeffs))
        })
        .collect()
}

/// The v-adic separable lift: the problem's operator coefficients are
/// embedded at v to precision `prec`, the Newton engine runs over the
/// quotient ring, and the output is stated to precision prec - (t - 1)
/// per the hyperderivative continuity bound.
pub fn vadic_separable_lift(
    problem: &LiftProblem,
    v: &FqPoly,
    prec: usize,
) -> Result<(TangentElt<VadicExtElt>, usize)> {
    let t = problem.t;
    if prec <= t - 1 {
        return Err(LiftError::InsufficientPrecision { needed: t });
    }
    let out_prec = prec - (t - 1);
    let comp = Completion::finite(v)?;
    // Monic scalar minimal polynomial, embedded v-adically.
    let lead = problem.coeffs.last().unwrap();
    let minpoly: Vec<ValSeries> = problem
        .coeffs
        .iter()
        .map(|c| {
            let num = comp.embed_poly(c, prec)?;
            let den = comp.embed_poly(lead, prec)?;
            num.div(&den).map_err(LiftError::Series)
        })
        .collect::<Result<Vec<_>>>()?;
    let ctx = VadicExt::new(&comp, minpoly, prec)?;
    let tangents = tangents_in_ctx(problem, &ctx, &comp, prec)?;
    let lambda = TangentElt::scalar(t, ctx.generator());
    let start = TangentElt::scalar(t, ctx.zero());
    let converged = |g: &TangentElt<VadicExtElt>| {
        g.coeffs
            .iter()
            .all(|c| c.is_zero() || c.valuation_floor() >= out_prec as i64)
    };
    let eps = newton_lift(&tangents, &lambda, &start, t, &converged)?;
    // Truncate the output to the certified precision.
    let eps = TangentElt::new(
        t,
        eps.coeffs
            .iter()
            .map(|c| VadicExtElt {
                ctx: ctx.clone(),
                rep: c.rep.iter().map(|s| s.truncate_abs(out_prec as i64)).collect(),
            })
            .collect(),
    );
    Ok((eps, out_prec))
}

/// Residual of a candidate lift in the v-adic ring (the contract: its
/// coefficient valuations reach the output precision).
pub fn vadic_lift_residual(
    problem: &LiftProblem,
    v: &FqPoly,
    prec: usize,
    eps: &TangentElt<VadicExtElt>,
) -> Result<TangentElt<VadicExtElt>> {
    let t = problem.t;
    let comp = Completion::finite(v)?;
    let ctx = eps.coeffs[0].ctx().clone();
    let tangents = tangents_in_ctx(problem, &ctx, &comp, prec)?;
    let lambda = TangentElt::scalar(t, ctx.generator());
    Ok(eval_g(&tangents, &lambda, eps).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lift::separable_lift;
    use algebra_core::Fq;

    fn worked_problem(t: usize) -> LiftProblem {
        let f5 = Fq::prime(5).unwrap();
        LiftProblem::new(
            vec![
                FqPoly::from_ints(&f5, Var::T, &[0, 0, 0, 1]),
                FqPoly::from_ints(&f5, Var::T, &[0, 1]),
                FqPoly::one(&f5, Var::T),
            ],
            t,
        )
        .unwrap()
    }

    #[test]
    fn vadic_matches_exact_closed_form() {
        // v = T - 1: u^2 + u + 1 mod v is irreducible over F_5
        // (discriminant -3 = 2 is a non-residue), so the margin is a unit.
        let f5 = Fq::prime(5).unwrap();
        let v = FqPoly::from_ints(&f5, Var::T, &[-1, 1]);
        let problem = worked_problem(2);
        let prec = 8;
        let (eps_v, out_prec) = vadic_separable_lift(&problem, &v, prec).unwrap();
        assert_eq!(out_prec, 7);
        // Map the exact closed form into the v-adic ring.
        let eps_exact = separable_lift(&problem).unwrap();
        let comp = Completion::finite(&v).unwrap();
        let ctx = eps_v.coeffs[1].ctx().clone();
        let embed = |x: &algebra_core::FieldExtElt| -> VadicExtElt {
            let mut rep = vec![comp.zero(prec as i64); 2];
            for (i, c) in x.rep().coeffs.iter().enumerate() {
                rep[i] = comp.embed_ratfn(c, prec).unwrap();
            }
            ctx.reduce(rep)
        };
        let expect = embed(&eps_exact.coeffs[1]);
        let got = &eps_v.coeffs[1];
        for i in 0..2 {
            let d = got.rep()[i]
                .sub(&expect.rep()[i].truncate_abs(out_prec as i64))
                .unwrap();
            assert!(
                d.valuation().map_or(true, |val| val >= out_prec as i64),
                "component {i}: {} vs {}",
                got.rep()[i],
                expect.rep()[i]
            );
        }
        assert!(eps_v.coeffs[0].is_zero());
    }

    #[test]
    fn trivial_element_consistency() {
        // f = u - g: the lift's eps-coefficients are D_j(g) reduced.
        let f3 = Fq::prime(3).unwrap();
        let g = FqPoly::from_ints(&f3, Var::T, &[1, 2, 0, 1]);
        let v = FqPoly::from_ints(&f3, Var::T, &[1, 1]);
        let problem = LiftProblem::new(vec![g.neg(), FqPoly::one(&f3, Var::T)], 3).unwrap();
        let (eps, out_prec) = vadic_separable_lift(&problem, &v, 9).unwrap();
        let comp = Completion::finite(&v).unwrap();
        for j in 1..3usize {
            let expect = comp
                .embed_poly(&hyperderive(j as u64, &g), out_prec)
                .unwrap();
            let got = &eps.coeffs[j].rep()[0];
            let d = got.sub(&expect.truncate_abs(out_prec as i64)).unwrap();
            assert!(d.valuation().map_or(true, |val| val >= out_prec as i64));
        }
    }

    #[test]
    fn residual_reaches_output_precision() {
        let f5 = Fq::prime(5).unwrap();
        let v = FqPoly::from_ints(&f5, Var::T, &[-1, 1]);
        for t in [2usize, 3] {
            let problem = worked_problem(t);
            let prec = 10;
            let (eps, out_prec) = vadic_separable_lift(&problem, &v, prec).unwrap();
            let residual = vadic_lift_residual(&problem, &v, prec, &eps).unwrap();
            for c in &residual.coeffs {
                assert!(
                    c.is_zero() || c.valuation_floor() >= out_prec as i64,
                    "t={t}: residual floor {:?}",
                    c.valuation_floor()
                );
            }
        }
    }

    #[test]
    fn inseparable_margin_rejected() {
        // v = T: u^2 + Tu + T^3 mod T = u^2, a double root: the margin
        // vanishes and the lift must refuse.
        let f5 = Fq::prime(5).unwrap();
        let v = FqPoly::gen(&f5, Var::T);
        let problem = worked_problem(2);
        assert!(matches!(
            vadic_separable_lift(&problem, &v, 8),
            Err(LiftError::NotSeparableAtPrecision) | Err(LiftError::DegenerateProblem)
        ));
    }

    #[test]
    fn quotient_ring_inverse_roundtrip() {
        let f5 = Fq::prime(5).unwrap();
        let v = FqPoly::from_ints(&f5, Var::T, &[-1, 1]);
        let problem = worked_problem(2);
        let comp = Completion::finite(&v).unwrap();
        let minpoly: Vec<ValSeries> = problem
            .coeffs
            .iter()
            .map(|c| comp.embed_poly(c, 8).unwrap())
            .collect();
        let ctx = VadicExt::new(&comp, minpoly, 8).unwrap();
        let lam = ctx.generator();
        let x = lam.add(&ctx.one());
        let xinv = x.inv().unwrap();
        let prod = x.mul(&xinv);
        let diff = prod.sub(&ctx.one());
        assert!(diff.is_zero() || diff.valuation_floor() >= 8);
    }
}
