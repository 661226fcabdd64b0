//! Twisted matrix series: sum A_i tau^i with t x t matrix coefficients,
//! composing by the twist rule (A tau^i)(B tau^j) = A B^(q^i) tau^(i+j),
//! where ^(q^i) raises every entry to the q^i-th power.

use std::fmt::Debug;

/// Scalar domains usable as twisted-series coefficients.
pub trait TauScalar: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    /// Raise to the q^k-th power (q the scalar field order).
    fn frobenius_q(&self, k: u32) -> Self;
    /// Embed a constant of the operator base field F_q as a scalar.
    fn from_const(&self, c: &algebra_core::FqElem) -> Self;
}

/// Row-major square matrix over a TauScalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<S> {
    pub n: usize,
    pub data: Vec<S>,
}

impl<S: TauScalar> Matrix<S> {
    pub fn zero_like(n: usize, sample: &S) -> Matrix<S> {
        Matrix {
            n,
            data: vec![sample.zero_like(); n * n],
        }
    }

    pub fn identity_like(n: usize, sample: &S) -> Matrix<S> {
        let mut m = Matrix::zero_like(n, sample);
        for i in 0..n {
            m.data[i * n + i] = sample.one_like();
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.n + j] = v;
    }

    pub fn add(&self, other: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.n, other.n);
        Matrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.n, other.n);
        Matrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Matrix<S> {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let sample = &self.data[0];
        let mut out = Matrix::zero_like(n, sample);
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn scale(&self, s: &S) -> Matrix<S> {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|a| a.mul(s)).collect(),
        }
    }

    pub fn frobenius_q(&self, k: u32) -> Matrix<S> {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|a| a.frobenius_q(k)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    /// X N - N X for the upper-superdiagonal nilpotent N.
    pub fn commutator_with_superdiag(&self) -> Matrix<S> {
        let n = self.n;
        let sample = &self.data[0];
        let mut out = Matrix::zero_like(n, sample);
        // (X N)_{i,j} = X_{i,j-1}; (N X)_{i,j} = X_{i+1,j}.
        for i in 0..n {
            for j in 0..n {
                let xn = if j >= 1 {
                    self.at(i, j - 1).clone()
                } else {
                    sample.zero_like()
                };
                let nx = if i + 1 < n {
                    self.at(i + 1, j).clone()
                } else {
                    sample.zero_like()
                };
                out.set(i, j, xn.sub(&nx));
            }
        }
        out
    }
}

/// Truncation marker: exact polynomials keep None.
pub type Trunc = Option<usize>;

fn trunc_min(a: Trunc, b: Trunc) -> Trunc {
    match (a, b) {
        (None, x) => x,
        (x, None) => x,
        (Some(a), Some(b)) => Some(a.min(b)),
    }
}

/// A (possibly truncated) twisted series sum A_i tau^i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauMatSeries<S> {
    pub dim: usize,
    pub coeffs: Vec<Matrix<S>>,
    pub trunc: Trunc,
}

impl<S: TauScalar> TauMatSeries<S> {
    pub fn zero(dim: usize, sample: &S, trunc: Trunc) -> TauMatSeries<S> {
        TauMatSeries {
            dim,
            coeffs: vec![Matrix::zero_like(dim, sample)],
            trunc,
        }
    }

    pub fn identity(dim: usize, sample: &S, trunc: Trunc) -> TauMatSeries<S> {
        TauMatSeries {
            dim,
            coeffs: vec![Matrix::identity_like(dim, sample)],
            trunc,
        }
    }

    pub fn from_coeffs(coeffs: Vec<Matrix<S>>, trunc: Trunc) -> TauMatSeries<S> {
        let dim = coeffs[0].n;
        let mut s = TauMatSeries { dim, coeffs, trunc };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        if let Some(t) = self.trunc {
            self.coeffs.truncate(t + 1);
        }
        while self.coeffs.len() > 1 && self.coeffs.last().map_or(false, |m| m.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeff(&self, i: usize) -> Matrix<S> {
        self.coeffs.get(i).cloned().unwrap_or_else(|| {
            Matrix::zero_like(self.dim, &self.coeffs[0].data[0])
        })
    }

    /// tau-degree of the stored polynomial part.
    pub fn tau_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn add(&self, other: &TauMatSeries<S>) -> TauMatSeries<S> {
        assert_eq!(self.dim, other.dim);
        let trunc = trunc_min(self.trunc, other.trunc);
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.coeff(i).add(&other.coeff(i)))
            .collect();
        TauMatSeries::from_coeffs(coeffs, trunc)
    }

    pub fn sub(&self, other: &TauMatSeries<S>) -> TauMatSeries<S> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TauMatSeries<S> {
        TauMatSeries {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|m| m.neg()).collect(),
            trunc: self.trunc,
        }
    }

    /// Composition product with the twist rule.
    pub fn compose(&self, other: &TauMatSeries<S>) -> TauMatSeries<S> {
        assert_eq!(self.dim, other.dim);
        let trunc = trunc_min(self.trunc, other.trunc);
        let out_len = match trunc {
            Some(t) => (self.tau_degree() + other.tau_degree()).min(t) + 1,
            None => self.tau_degree() + other.tau_degree() + 1,
        };
        let sample = &self.coeffs[0].data[0];
        let mut coeffs = vec![Matrix::zero_like(self.dim, sample); out_len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= out_len {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= out_len {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                let term = a.mul(&b.frobenius_q(i as u32));
                coeffs[i + j] = coeffs[i + j].add(&term);
            }
        }
        TauMatSeries::from_coeffs(coeffs, trunc)
    }

    /// Left-multiply every coefficient by a fixed matrix (M tau^0 composed
    /// on the left).
    pub fn scale_matrix_left(&self, m: &Matrix<S>) -> TauMatSeries<S> {
        TauMatSeries {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|c| m.mul(c)).collect(),
            trunc: self.trunc,
        }
    }

    pub fn truncate(&self, t: usize) -> TauMatSeries<S> {
        let mut s = self.clone();
        s.trunc = trunc_min(s.trunc, Some(t));
        s.normalize();
        s
    }

    /// Equality of coefficients through tau-degree t.
    pub fn agrees_to(&self, other: &TauMatSeries<S>, t: usize) -> bool {
        (0..=t).all(|i| self.coeff(i) == other.coeff(i))
    }
}
