//! The unique extension of d/dT to separable algebraic elements, by
//! implicit differentiation of the minimal polynomial:
//! d(lambda)/dT = -(df/dT)(lambda) / f'(lambda).

use algebra_core::{AlgebraError, FieldExtElt, UPoly};

/// Evaluate a u-polynomial at an extension element.
pub fn upoly_eval(f: &UPoly, x: &FieldExtElt) -> FieldExtElt {
    let ext = x.ext().clone();
    let mut acc = ext.zero();
    for c in f.coeffs.iter().rev() {
        acc = acc.mul(x).add(&ext.from_base(c.clone()));
    }
    acc
}

/// d(lambda)/dT for the adjoined root lambda, or more generally for the
/// generator of the element's extension. Separability of the minimal
/// polynomial (checked at construction) makes the denominator nonzero.
pub fn extend_derivation(lambda: &FieldExtElt) -> Result<FieldExtElt, AlgebraError> {
    let ext = lambda.ext().clone();
    let f = ext.minpoly();
    let df_dt = f.derivative_coeffs();
    let df_du = f.derivative_u();
    let num = upoly_eval(&df_dt, lambda);
    let den = upoly_eval(&df_du, lambda);
    num.neg().div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use algebra_core::{ExtField, Fq, FqPoly, RatFn, UPoly, Var};

    fn ratpoly(field: &Fq, coeffs: &[i64]) -> RatFn {
        RatFn::from_poly(FqPoly::from_ints(field, Var::T, coeffs))
    }

    #[test]
    fn worked_quadratic_r5() {
        // lambda^2 + T lambda + T^3 = 0 over F_5:
        // (2 lambda + T) dlambda/dT + (lambda + 3T^2) = 0.
        let f5 = Fq::prime(5).unwrap();
        let f = UPoly::new(vec![
            ratpoly(&f5, &[0, 0, 0, 1]), // T^3
            ratpoly(&f5, &[0, 1]),       // T
            ratpoly(&f5, &[1]),
        ]);
        let ext = ExtField::new(f, Var::U).unwrap();
        let lam = ext.generator();
        let d = extend_derivation(&lam).unwrap();
        // Expected: -(lambda + 3T^2) / (2 lambda + T).
        let num = lam
            .add(&ext.from_base(ratpoly(&f5, &[0, 0, 3])))
            .neg();
        let den = lam
            .mul(&ext.from_base(ratpoly(&f5, &[2])))
            .add(&ext.from_base(ratpoly(&f5, &[0, 1])));
        assert_eq!(d, num.div(&den).unwrap());
    }

    #[test]
    fn trivial_embedding_matches_d1() {
        // lambda with minimal polynomial u - g(T) is g itself; the
        // extension derivative must equal D_1(g).
        let f3 = Fq::prime(3).unwrap();
        let g = FqPoly::from_ints(&f3, Var::T, &[1, 2, 0, 1]);
        let f = UPoly::new(vec![
            RatFn::from_poly(g.neg()),
            ratpoly(&f3, &[1]),
        ]);
        let ext = ExtField::new(f, Var::U).unwrap();
        let lam = ext.generator();
        let d = extend_derivation(&lam).unwrap();
        let expect = ext.from_base(RatFn::from_poly(crate::hyperderive(1, &g)));
        assert_eq!(d, expect);
    }

    #[test]
    fn sqrt_minus_t_r3() {
        // lambda^2 = -T over F_3: dlambda/dT = -1/(2 lambda) = 1/lambda.
        let f3 = Fq::prime(3).unwrap();
        let f = UPoly::new(vec![
            ratpoly(&f3, &[0, 1]), // +T (u^2 + T)
            ratpoly(&f3, &[0]),
            ratpoly(&f3, &[1]),
        ]);
        let ext = ExtField::new(f, Var::U).unwrap();
        let lam = ext.generator();
        let d = extend_derivation(&lam).unwrap();
        assert_eq!(d, lam.inv().unwrap());
    }

    #[test]
    fn derivation_law_on_extension() {
        // d(ab) = a db + b da for elements of k(lambda), where the
        // derivative of c0 + c1*lambda is c0' + c1' lambda + c1 * dlambda.
        let f5 = Fq::prime(5).unwrap();
        let f = UPoly::new(vec![
            ratpoly(&f5, &[0, 0, 0, 1]),
            ratpoly(&f5, &[0, 1]),
            ratpoly(&f5, &[1]),
        ]);
        let ext = ExtField::new(f, Var::U).unwrap();
        let lam = ext.generator();
        let dlam = extend_derivation(&lam).unwrap();
        let derive = |x: &FieldExtElt| {
            // x = c0 + c1 u; dx = c0' + c1' u + c1 * dlam
            let c0 = x.rep().coeff(0, &f5, Var::T);
            let c1 = x.rep().coeff(1, &f5, Var::T);
            ext.from_base(c0.derivative())
                .add(&ext.generator().mul(&ext.from_base(c1.derivative())))
                .add(&dlam.mul(&ext.from_base(c1)))
        };
        let mut rng = algebra_core::DetRng::new(17);
        for _ in 0..25 {
            let mk = |rng: &mut algebra_core::DetRng| {
                let c0 = ratpoly(&f5, &[rng.next_below(5) as i64, rng.next_below(5) as i64]);
                let c1 = ratpoly(&f5, &[rng.next_below(5) as i64, 1]);
                ext.from_base(c0).add(&ext.generator().mul(&ext.from_base(c1)))
            };
            let a = mk(&mut rng);
            let b = mk(&mut rng);
            let lhs = derive(&a.mul(&b));
            let rhs = a.mul(&derive(&b)).add(&b.mul(&derive(&a)));
            assert_eq!(lhs, rhs);
        }
    }
}
