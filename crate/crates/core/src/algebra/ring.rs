//! Minimal commutative-ring abstraction shared by the series types.
//!
//! Implemented for `rug::Rational` (the hot recursion paths), for
//! [`ExactScalar`](super::scalar::ExactScalar), and for polynomials and
//! truncated series over either, so Laurent/power-series code can be nested.

use rug::Rational;

use super::scalar::ExactScalar;

pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn mul_q(&self, q: &Rational) -> Self;
    fn from_q(q: Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_q(Rational::from(n))
    }

    /// Multiplicative inverse where it exists; `None` otherwise.
    fn try_inv(&self) -> Option<Self> {
        None
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::new()
    }
    fn one() -> Self {
        Rational::from(1)
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, other: &Self) -> Self {
        Rational::from(self + other)
    }
    fn sub(&self, other: &Self) -> Self {
        Rational::from(self - other)
    }
    fn neg(&self) -> Self {
        Rational::from(-self.clone())
    }
    fn mul(&self, other: &Self) -> Self {
        Rational::from(self * other)
    }
    fn mul_q(&self, q: &Rational) -> Self {
        Rational::from(self * q)
    }
    fn from_q(q: Rational) -> Self {
        q
    }
    fn try_inv(&self) -> Option<Self> {
        if *self == 0 {
            None
        } else {
            Some(Rational::from(self.clone().recip()))
        }
    }
}

impl Ring for ExactScalar {
    fn zero() -> Self {
        ExactScalar::zero()
    }
    fn one() -> Self {
        ExactScalar::one()
    }
    fn is_zero(&self) -> bool {
        ExactScalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        ExactScalar::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        ExactScalar::sub(self, other)
    }
    fn neg(&self) -> Self {
        ExactScalar::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        ExactScalar::mul(self, other)
    }
    fn mul_q(&self, q: &Rational) -> Self {
        ExactScalar::mul_q(self, q)
    }
    fn from_q(q: Rational) -> Self {
        ExactScalar::from_q(q)
    }
    fn try_inv(&self) -> Option<Self> {
        // Invertible only for plain nonzero rationals.
        self.as_rational().and_then(|q| {
            if q == 0 {
                None
            } else {
                Some(ExactScalar::from_q(q.recip()))
            }
        })
    }
}
