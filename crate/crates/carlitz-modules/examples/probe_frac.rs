use algebra_core::{Fq, FqPoly, Var};
use carlitz_modules::{tensor_exp_log_frac, PolyFrac, TauMatSeries};

fn main() {
    for (p, n, prec) in [(3u64, 2usize, 6usize), (3, 2, 8), (3, 1, 8), (2, 2, 8), (5, 2, 5)] {
        let t0 = std::time::Instant::now();
        let field = Fq::prime(p).unwrap();
        let (exp, log) = tensor_exp_log_frac(&field, n, prec);
        let build = t0.elapsed();
        let th = PolyFrac::from_poly(FqPoly::gen(&field, Var::T));
        let t1 = std::time::Instant::now();
        let c1 = log.compose(&exp);
        let tc = t1.elapsed();
        let t2 = std::time::Instant::now();
        let ok1 = c1.agrees_to(&TauMatSeries::identity(n, &th, Some(prec)), prec);
        eprintln!(
            "p={p} n={n} prec={prec}: build {build:?} compose {tc:?} compare {:?} ok={ok1}",
            t2.elapsed()
        );
    }
}
