//! Arbitrary-precision numerics: real/complex values with explicit precision
//! contexts, double-exponential quadrature, and the special-function calls
//! the spectral pipeline needs.
//!
//! Everything is MPFR-backed; precision is always passed explicitly and
//! results are rounded once at the boundary.

pub mod cplx;
pub mod quad;
pub mod special;

pub use cplx::Cplx;

use rug::Float;
use rug::Rational;

/// Convert decimal digits to a comfortable bit precision (with guard bits).
pub fn bits_for_digits(digits: u32) -> u32 {
    (digits as f64 * 3.3219280948873626).ceil() as u32 + 24
}

pub fn float_from_q(q: &Rational, prec: u32) -> Float {
    Float::with_val(prec, q)
}

pub fn pi(prec: u32) -> Float {
    Float::with_val(prec, rug::float::Constant::Pi)
}

pub fn euler_gamma(prec: u32) -> Float {
    Float::with_val(prec, rug::float::Constant::Euler)
}

/// e^x with the precision of x.
pub fn exp(x: &Float) -> Float {
    x.clone().exp()
}

pub fn ln(x: &Float) -> Float {
    x.clone().ln()
}

pub fn sqrt(x: &Float) -> Float {
    x.clone().sqrt()
}

/// x^k for integer k.
pub fn powi(x: &Float, k: i64) -> Float {
    use rug::ops::Pow;
    Float::with_val(x.prec(), x.pow(k as i32))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digit_conversion_monotone() {
        assert!(bits_for_digits(30) > 100);
        assert!(bits_for_digits(60) > bits_for_digits(30));
    }
}
