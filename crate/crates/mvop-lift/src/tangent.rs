//! Tangent algebras R[eps]/(eps^t): the linearized operator actions
//! E_(a,*) = a-bar + nilpotent, their inverses, and the homomorphic
//! extension to K = F_q((1/T)).

use crate::error::{LiftError, Result};
use algebra_core::{FqPoly, RatFn, Var};
use carlitz_modules::TauScalar;
use hyperderiv::{hyperderive, hyperderive_series};
use local_series::ValSeries;

/// An element c_0 + c_1 eps + ... + c_(t-1) eps^(t-1) of S[eps]/(eps^t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentElt<S> {
    pub t: usize,
    pub coeffs: Vec<S>,
}

impl<S: TauScalar> TangentElt<S> {
    pub fn new(t: usize, mut coeffs: Vec<S>) -> TangentElt<S> {
        assert!(t >= 1);
        assert!(!coeffs.is_empty());
        let sample = coeffs[0].zero_like();
        coeffs.resize(t, sample);
        coeffs.truncate(t);
        TangentElt { t, coeffs }
    }

    pub fn scalar(t: usize, c: S) -> TangentElt<S> {
        TangentElt::new(t, vec![c])
    }

    pub fn zero_like(&self) -> TangentElt<S> {
        TangentElt::scalar(self.t, self.coeffs[0].zero_like())
    }

    pub fn one_like(&self) -> TangentElt<S> {
        TangentElt::scalar(self.t, self.coeffs[0].one_like())
    }

    /// eps itself (zero when t = 1).
    pub fn eps_like(&self) -> TangentElt<S> {
        let mut coeffs = vec![self.coeffs[0].zero_like(); self.t];
        if self.t > 1 {
            coeffs[1] = self.coeffs[0].one_like();
        }
        TangentElt::new(self.t, coeffs)
    }

    pub fn constant_term(&self) -> &S {
        &self.coeffs[0]
    }

    /// The nilpotent part (constant term dropped).
    pub fn nilpotent_part(&self) -> TangentElt<S> {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] = coeffs[0].zero_like();
        TangentElt::new(self.t, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_nilpotent(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    pub fn is_unit(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    pub fn add(&self, other: &TangentElt<S>) -> TangentElt<S> {
        assert_eq!(self.t, other.t);
        TangentElt::new(
            self.t,
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    pub fn sub(&self, other: &TangentElt<S>) -> TangentElt<S> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TangentElt<S> {
        TangentElt {
            t: self.t,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &TangentElt<S>) -> TangentElt<S> {
        assert_eq!(self.t, other.t);
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.t];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= self.t {
                    break;
                }
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        TangentElt::new(self.t, out)
    }

    pub fn pow(&self, e: usize) -> TangentElt<S> {
        let mut acc = self.one_like();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse via the truncated geometric series in the
    /// nilpotent part; requires a unit constant term.
    pub fn inv(&self) -> Result<TangentElt<S>> {
        let c0 = self.constant_term();
        let c0_inv = c0.inv().ok_or(LiftError::NotAUnit)?;
        // x = c0 (1 + n/c0): 1/x = (1/c0) sum (-n/c0)^k.
        let scaled_nil = self
            .nilpotent_part()
            .mul(&TangentElt::scalar(self.t, c0_inv.clone()))
            .neg();
        let mut acc = self.one_like();
        let mut term = self.one_like();
        for _ in 1..self.t {
            term = term.mul(&scaled_nil);
            if term.is_zero() {
                break;
            }
            acc = acc.add(&term);
        }
        Ok(acc.mul(&TangentElt::scalar(self.t, c0_inv)))
    }

    pub fn div(&self, other: &TangentElt<S>) -> Result<TangentElt<S>> {
        Ok(self.mul(&other.inv()?))
    }

    /// Raise to the p^s-th power. Cross terms vanish in characteristic p,
    /// so this is the coefficient-wise Frobenius with eps-order dilation.
    pub fn pow_p_s(&self, p: u64, s: u32) -> TangentElt<S> {
        let e = p.pow(s);
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.t];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let target = (i as u64).checked_mul(e).unwrap();
            if target < self.t as u64 {
                // c^(p^s) by square-and-multiply through mul.
                let mut acc = c.one_like();
                let mut base = c.clone();
                let mut k = e;
                while k > 0 {
                    if k & 1 == 1 {
                        acc = acc.mul(&base);
                    }
                    k >>= 1;
                    if k > 0 {
                        base = base.mul(&base);
                    }
                }
                out[target as usize] = acc;
            }
        }
        TangentElt::new(self.t, out)
    }
}

/// E_(a,*) = sum_(i<t) D_i(a) eps^i with theta-imaged coefficients: the
/// tau^0 part of the n = t tensor-power action under N -> eps.
pub fn tangent_of_operator(a: &FqPoly, t: usize) -> TangentElt<RatFn> {
    let coeffs = (0..t)
        .map(|i| RatFn::from_poly(hyperderive(i as u64, a).with_var(Var::T)))
        .collect();
    TangentElt::new(t, coeffs)
}

/// Inverse of a tangent element (the displayed geometric series for
/// E_(1/T,*)); exposed under the operation's own name.
pub fn tangent_invert<S: TauScalar>(x: &TangentElt<S>) -> Result<TangentElt<S>> {
    x.inv()
}

/// Homomorphic extension of the tangent action to rational functions:
/// numerator tangent times the inverse of the denominator tangent.
pub fn tangent_extend_ratfn(x: &RatFn, t: usize) -> Result<TangentElt<RatFn>> {
    if x.den().is_one() {
        return Ok(tangent_of_operator(x.num(), t));
    }
    let num = tangent_of_operator(x.num(), t);
    let den = tangent_of_operator(x.den(), t);
    num.div(&den)
}

/// Extension to K at the infinite place: coefficients are the series
/// hyperderivatives D_i(x), computed to the input's precision.
pub fn tangent_extend_series(x: &ValSeries, t: usize) -> Result<TangentElt<ValSeries>> {
    let coeffs = (0..t)
        .map(|i| hyperderive_series(i as u64, x))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(TangentElt::new(t, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use algebra_core::Fq;

    fn ratpoly(field: &Fq, coeffs: &[i64]) -> RatFn {
        RatFn::from_poly(FqPoly::from_ints(field, Var::T, coeffs))
    }

    #[test]
    fn tangent_of_t_and_constants() {
        let f5 = Fq::prime(5).unwrap();
        let t = FqPoly::gen(&f5, Var::T);
        let e = tangent_of_operator(&t, 2);
        assert_eq!(e.coeffs[0], ratpoly(&f5, &[0, 1]));
        assert!(e.coeffs[1].is_one());
        // a = T^3, t = 2: theta^3 + 3 theta^2 eps.
        let t3 = FqPoly::from_ints(&f5, Var::T, &[0, 0, 0, 1]);
        let e = tangent_of_operator(&t3, 2);
        assert_eq!(e.coeffs[0], ratpoly(&f5, &[0, 0, 0, 1]));
        assert_eq!(e.coeffs[1], ratpoly(&f5, &[0, 0, 3]));
        // Constants have zero nilpotent part.
        let c = FqPoly::from_ints(&f5, Var::T, &[2]);
        let e = tangent_of_operator(&c, 4);
        assert!(e.nilpotent_part().is_zero());
    }

    #[test]
    fn displayed_inverse_of_theta_plus_eps() {
        // (theta + eps)^(-1) = theta^(-1) - theta^(-2) eps at t = 2.
        let f5 = Fq::prime(5).unwrap();
        let t = FqPoly::gen(&f5, Var::T);
        let e = tangent_of_operator(&t, 2);
        let inv = tangent_invert(&e).unwrap();
        let theta = ratpoly(&f5, &[0, 1]);
        assert_eq!(inv.coeffs[0], theta.inv().unwrap());
        assert_eq!(inv.coeffs[1], theta.mul(&theta).inv().unwrap().neg());
        assert!(e.mul(&inv).sub(&e.one_like()).is_zero());
        // Scalars invert as scalars; zero constant term refuses.
        let c = TangentElt::scalar(3, ratpoly(&f5, &[3]));
        assert!(c.inv().unwrap().coeffs[0].mul(&c.coeffs[0]).is_one());
        let eps = c.eps_like();
        assert!(matches!(eps.inv(), Err(LiftError::NotAUnit)));
    }

    #[test]
    fn extend_k_ratfn_consistency() {
        let f5 = Fq::prime(5).unwrap();
        let t = FqPoly::gen(&f5, Var::T);
        // x = 1/T at t = 2 reproduces the displayed series.
        let x = RatFn::from_poly(t.clone()).inv().unwrap();
        let e = tangent_extend_ratfn(&x, 2).unwrap();
        let direct = tangent_invert(&tangent_of_operator(&t, 2)).unwrap();
        assert_eq!(e, direct);
        // Consistency with the operator tangent for x = T.
        let xt = RatFn::from_poly(t.clone());
        assert_eq!(
            tangent_extend_ratfn(&xt, 3).unwrap(),
            tangent_of_operator(&t, 3)
        );
        // Homomorphism: (T+1)/T maps to tangent(T+1) * tangent(T)^(-1).
        let t1 = FqPoly::from_ints(&f5, Var::T, &[1, 1]);
        let frac = RatFn::new(t1.clone(), t.clone()).unwrap();
        let lhs = tangent_extend_ratfn(&frac, 3).unwrap();
        let rhs = tangent_of_operator(&t1, 3)
            .mul(&tangent_invert(&tangent_of_operator(&t, 3)).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn extend_series_matches_ratfn_on_polynomials() {
        use local_series::Completion;
        let f3 = Fq::prime(3).unwrap();
        let comp = Completion::infinity(&f3);
        let a = FqPoly::from_ints(&f3, Var::T, &[1, 2, 1]);
        let series = comp.embed_poly(&a, 20).unwrap();
        let te = tangent_extend_series(&series, 3).unwrap();
        let tr = tangent_of_operator(&a, 3);
        for i in 0..3 {
            let expect = comp.embed_poly(tr.coeffs[i].num(), 14).unwrap();
            let p = te.coeffs[i].abs_prec().min(expect.abs_prec());
            assert!(te.coeffs[i].agrees_to(&expect, p), "i={i}");
        }
    }

    #[test]
    fn ring_axioms_spot() {
        let f3 = Fq::prime(3).unwrap();
        let a = tangent_of_operator(&FqPoly::from_ints(&f3, Var::T, &[1, 1, 2]), 4);
        let b = tangent_of_operator(&FqPoly::from_ints(&f3, Var::T, &[0, 2, 0, 1]), 4);
        let c = tangent_of_operator(&FqPoly::from_ints(&f3, Var::T, &[2, 0, 1]), 4);
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }
}
