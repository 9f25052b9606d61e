//! Minimal arbitrary-precision complex arithmetic on top of MPFR reals.
//!
//! Only the operations the spectral code needs: field ops, exp, ln, integer
//! and complex powers, and magnitude. The branch of ln/pow is the principal
//! one; callers that need the conjugate continuation negate the imaginary
//! part explicitly.

use rug::Float;

#[derive(Clone, Debug, PartialEq)]
pub struct Cplx {
    pub re: Float,
    pub im: Float,
}

impl Cplx {
    pub fn new(re: Float, im: Float) -> Self {
        Cplx { re, im }
    }

    pub fn from_f64(re: f64, im: f64, prec: u32) -> Self {
        Cplx::new(Float::with_val(prec, re), Float::with_val(prec, im))
    }

    pub fn real(re: Float) -> Self {
        let prec = re.prec();
        Cplx::new(re, Float::with_val(prec, 0))
    }

    pub fn zero(prec: u32) -> Self {
        Cplx::from_f64(0.0, 0.0, prec)
    }

    pub fn one(prec: u32) -> Self {
        Cplx::from_f64(1.0, 0.0, prec)
    }

    pub fn i(prec: u32) -> Self {
        Cplx::from_f64(0.0, 1.0, prec)
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn add(&self, o: &Cplx) -> Cplx {
        Cplx::new(
            Float::with_val(self.prec(), &self.re + &o.re),
            Float::with_val(self.prec(), &self.im + &o.im),
        )
    }

    pub fn sub(&self, o: &Cplx) -> Cplx {
        Cplx::new(
            Float::with_val(self.prec(), &self.re - &o.re),
            Float::with_val(self.prec(), &self.im - &o.im),
        )
    }

    pub fn neg(&self) -> Cplx {
        Cplx::new(
            Float::with_val(self.prec(), -self.re.clone()),
            Float::with_val(self.prec(), -self.im.clone()),
        )
    }

    pub fn mul(&self, o: &Cplx) -> Cplx {
        let p = self.prec();
        let re = Float::with_val(p, &self.re * &o.re) - Float::with_val(p, &self.im * &o.im);
        let im = Float::with_val(p, &self.re * &o.im) + Float::with_val(p, &self.im * &o.re);
        Cplx::new(re, im)
    }

    pub fn scale(&self, s: &Float) -> Cplx {
        Cplx::new(
            Float::with_val(self.prec(), &self.re * s),
            Float::with_val(self.prec(), &self.im * s),
        )
    }

    pub fn div(&self, o: &Cplx) -> Cplx {
        let p = self.prec();
        let den = Float::with_val(p, o.re.clone().square() + o.im.clone().square());
        let num = self.mul(&o.conj());
        Cplx::new(num.re / &den, num.im / den)
    }

    pub fn conj(&self) -> Cplx {
        Cplx::new(
            self.re.clone(),
            Float::with_val(self.prec(), -self.im.clone()),
        )
    }

    pub fn abs(&self) -> Float {
        Float::with_val(
            self.prec(),
            self.re.clone().square() + self.im.clone().square(),
        )
        .sqrt()
    }

    pub fn exp(&self) -> Cplx {
        let r = self.re.clone().exp();
        let (s, c) = self.im.clone().sin_cos(Float::new(self.prec()));
        Cplx::new(Float::with_val(self.prec(), &r * &c), r * s)
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Cplx {
        let mag = self.abs().ln();
        let arg = Float::with_val(self.prec(), self.im.clone().atan2(&self.re));
        Cplx::new(mag, arg)
    }

    /// Principal power z^w = exp(w·ln z).
    pub fn pow(&self, w: &Cplx) -> Cplx {
        self.ln().mul(w).exp()
    }

    pub fn powi(&self, k: i64) -> Cplx {
        let mut acc = Cplx::one(self.prec());
        let mut base = if k >= 0 { self.clone() } else { self.inv() };
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn inv(&self) -> Cplx {
        Cplx::one(self.prec()).div(self)
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_identity() {
        let p = 128;
        let ipi = Cplx::new(Float::new(p), super::super::pi(p));
        let e = ipi.exp();
        assert!((e.re.to_f64() + 1.0).abs() < 1e-30);
        assert!(e.im.to_f64().abs() < 1e-30);
    }

    #[test]
    fn principal_branch_log() {
        // ln(−1 + 0i) = iπ
        let z = Cplx::from_f64(-1.0, 0.0, 128);
        let l = z.ln();
        assert!((l.im.to_f64() - std::f64::consts::PI).abs() < 1e-14);
    }
}
