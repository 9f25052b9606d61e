//! Dense univariate polynomials over a [`Ring`].
//!
//! Used with `Rational` coefficients for the spectral-function recursions
//! (the polynomial variable is then the energy E) and with `ExactScalar`
//! coefficients for presentation-layer types.

use rug::Rational;
use serde::{Deserialize, Serialize};

use super::ring::Ring;

/// coeffs[k] is the coefficient of x^k; no trailing zeros are stored.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Poly<R: Ring> {
    pub coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(R::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn x() -> Self {
        Poly::new(vec![R::zero(), R::one()])
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::new(vec![]);
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.mul_q(&Rational::from(i as i64 + 1)))
                .collect(),
        )
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: vec![] }
    }
    fn one() -> Self {
        Poly::new(vec![R::one()])
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k);
            let b = other.coeffs.get(k);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::new(out)
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(R::neg).collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }
    fn mul_q(&self, q: &Rational) -> Self {
        if *q == 0 {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.mul_q(q)).collect(),
        }
    }
    fn from_q(q: Rational) -> Self {
        Poly::new(vec![R::from_q(q)])
    }
    fn try_inv(&self) -> Option<Self> {
        // Invertible only for degree-0 polynomials with invertible coefficient.
        if self.coeffs.len() == 1 {
            self.coeffs[0].try_inv().map(|c| Poly::new(vec![c]))
        } else {
            None
        }
    }
}

/// Polynomial over rationals: the workhorse coefficient type, the variable
/// being the energy E in the spectral-function recursions.
pub type QPoly = Poly<Rational>;

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> QPoly {
        Poly::new(v.iter().map(|&n| Rational::from(n)).collect())
    }

    #[test]
    fn mul_and_eval() {
        // (1+x)(1-x) = 1 - x²
        let a = p(&[1, 1]);
        let b = p(&[1, -1]);
        assert_eq!(a.mul(&b), p(&[1, 0, -1]));
        assert_eq!(a.eval(&Rational::from(3)), Rational::from(4));
    }

    #[test]
    fn derivative_drops_degree() {
        let a = p(&[5, 0, 7]); // 5 + 7x²
        assert_eq!(a.derivative(), p(&[0, 14]));
    }
}
