//! Truncated series in the coupling g with an explicit order and an optional
//! singular head (A-type functions carry an a/g term).
//!
//! Every operation tracks the effective order of the result; mixed-order
//! arithmetic truncates to the minimum. Silent precision loss is forbidden:
//! the order is part of the value.

use rug::Rational;
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::ring::Ring;
use crate::error::{Error, Result};

/// f(g) = Σ_{k=min_deg}^{order} coeffs[k−min_deg] · g^k, coefficients in R.
///
/// `order` is the highest power whose coefficient is known exactly.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct GSeries<R: Ring> {
    pub min_deg: i64,
    pub order: i64,
    pub coeffs: Vec<R>,
}

impl<R: Ring> GSeries<R> {
    pub fn new(min_deg: i64, order: i64, mut coeffs: Vec<R>) -> Self {
        assert!(order >= min_deg - 1);
        coeffs.resize((order - min_deg + 1).max(0) as usize, R::zero());
        let mut s = GSeries {
            min_deg,
            order,
            coeffs,
        };
        s.normalize();
        s
    }

    pub fn zero(order: i64) -> Self {
        GSeries {
            min_deg: order + 1,
            order,
            coeffs: vec![],
        }
    }

    pub fn constant(c: R, order: i64) -> Self {
        GSeries::new(0, order, vec![c])
    }

    pub fn monomial(deg: i64, c: R, order: i64) -> Self {
        GSeries::new(deg, order, {
            let mut v = vec![c];
            v.truncate(((order - deg + 1).max(0)) as usize);
            v
        })
    }

    fn normalize(&mut self) {
        while self.coeffs.first().is_some_and(R::is_zero) {
            self.coeffs.remove(0);
            self.min_deg += 1;
        }
        if self.coeffs.is_empty() {
            self.min_deg = self.order + 1;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::is_zero)
    }

    pub fn coeff(&self, deg: i64) -> R {
        if deg < self.min_deg || deg > self.order {
            return R::zero();
        }
        self.coeffs
            .get((deg - self.min_deg) as usize)
            .cloned()
            .unwrap_or_else(R::zero)
    }

    /// The terms with negative powers of g (for A-type functions: a/g).
    pub fn singular_part(&self) -> Vec<(i64, R)> {
        let mut out = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            let d = self.min_deg + i as i64;
            if d < 0 && !c.is_zero() {
                out.push((d, c.clone()));
            }
        }
        out
    }

    pub fn truncated(&self, order: i64) -> Self {
        let mut s = self.clone();
        if order < s.order {
            s.order = order;
            s.coeffs
                .truncate(((order - s.min_deg + 1).max(0)) as usize);
            s.normalize();
        }
        s
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let min = self.min_deg.min(other.min_deg).min(order + 1);
        let mut out = vec![R::zero(); ((order - min + 1).max(0)) as usize];
        for (i, slot) in out.iter_mut().enumerate() {
            let d = min + i as i64;
            *slot = self.coeff(d).add(&other.coeff(d));
        }
        GSeries::new(min, order, out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        GSeries {
            min_deg: self.min_deg,
            order: self.order,
            coeffs: self.coeffs.iter().map(R::neg).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        // As for Laurent series: a singular head of one factor pulls the
        // other factor's unknown tail down into the window.
        let order = (self.order + other.min_deg.min(0)).min(other.order + self.min_deg.min(0));
        if self.is_zero() || other.is_zero() {
            return Self::zero(order);
        }
        let min = self.min_deg + other.min_deg;
        if min > order {
            return Self::zero(order);
        }
        let mut out = vec![R::zero(); (order - min + 1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let da = self.min_deg + i as i64;
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let d = da + other.min_deg + j as i64;
                if d > order {
                    break;
                }
                out[(d - min) as usize] = out[(d - min) as usize].add(&a.mul(b));
            }
        }
        GSeries::new(min, order, out)
    }

    pub fn mul_q(&self, q: &Rational) -> Self {
        GSeries {
            min_deg: self.min_deg,
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.mul_q(q)).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut s = GSeries {
            min_deg: self.min_deg,
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        };
        s.normalize();
        s
    }

    /// Shift by g^k (k may be negative).
    pub fn shift(&self, k: i64) -> Self {
        GSeries {
            min_deg: self.min_deg + k,
            order: self.order + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn derivative_g(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            let d = self.min_deg + i as i64;
            out.push(c.mul_q(&Rational::from(d)));
        }
        GSeries::new(self.min_deg - 1, self.order - 1, out)
    }

    pub fn inverse(&self) -> Result<Self> {
        let lead = self
            .coeffs
            .first()
            .ok_or_else(|| Error::NonInvertibleLeading("zero series".into()))?;
        let lead_inv = lead.try_inv().ok_or_else(|| {
            Error::NonInvertibleLeading("leading coefficient has no inverse".into())
        })?;
        let val = self.min_deg;
        let n = (self.order - val).max(0) as usize + 1;
        let mut unit = vec![R::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i < n {
                unit[i] = c.mul(&lead_inv);
            }
        }
        let mut inv = vec![R::zero(); n];
        inv[0] = R::one();
        for k in 1..n {
            let mut acc = R::zero();
            for j in 1..=k {
                if !unit[j].is_zero() && !inv[k - j].is_zero() {
                    acc = acc.add(&unit[j].mul(&inv[k - j]));
                }
            }
            inv[k] = acc.neg();
        }
        let coeffs = inv.into_iter().map(|c| c.mul(&lead_inv)).collect();
        Ok(GSeries::new(-val, self.order - 2 * val, coeffs))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }

    /// exp of a series with no constant or singular part.
    pub fn exp(&self) -> Result<Self> {
        if self.min_deg < 1 {
            return Err(Error::NonInvertibleLeading(
                "exp requires a series that vanishes at g = 0".into(),
            ));
        }
        let order = self.order;
        let mut acc = GSeries::constant(R::one(), order);
        let mut term = GSeries::constant(R::one(), order);
        let mut k = 1u32;
        loop {
            term = term.mul(self).mul_q(&Rational::from((1, k)));
            term = term.truncated(order);
            if term.is_zero() || term.min_deg > order {
                break;
            }
            acc = acc.add(&term);
            k += 1;
        }
        Ok(acc)
    }

    /// log of a series with unit constant term.
    pub fn log(&self) -> Result<Self> {
        if self.min_deg != 0 || !self.coeff(0).sub(&R::one()).is_zero() {
            return Err(Error::NonInvertibleLeading(
                "log requires unit constant term".into(),
            ));
        }
        // log(1+t) = Σ (−1)^{k+1} t^k / k
        let t = self.sub(&GSeries::constant(R::one(), self.order));
        let order = self.order;
        let mut acc = GSeries::zero(order);
        let mut pw = GSeries::constant(R::one(), order);
        let mut k = 1i64;
        loop {
            pw = pw.mul(&t).truncated(order);
            if pw.is_zero() || pw.min_deg > order {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc = acc.add(&pw.mul_q(&Rational::from((sign, k))));
            k += 1;
        }
        Ok(acc)
    }

    /// Integer power (negative allowed when invertible).
    pub fn pow(&self, n: i64) -> Result<Self> {
        if n == 0 {
            return Ok(GSeries::constant(R::one(), self.order));
        }
        let (mut base, mut e) = if n < 0 {
            (self.inverse()?, (-n) as u64)
        } else {
            (self.clone(), n as u64)
        };
        let mut acc: Option<Self> = None;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc.unwrap())
    }

    /// Substitute another series for g: self(h(g)). Requires h = O(g).
    pub fn compose(&self, h: &Self) -> Result<Self> {
        if self.min_deg < 0 {
            return Err(Error::NonInvertibleLeading(
                "compose requires a regular outer series".into(),
            ));
        }
        if h.min_deg < 1 {
            return Err(Error::NonInvertibleLeading(
                "compose requires inner series with h(0) = 0".into(),
            ));
        }
        let order = self.order.min(h.order);
        let mut acc = GSeries::zero(order);
        // Horner in h
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(h).truncated(order);
            acc = acc.add(&GSeries::constant(c.clone(), order));
        }
        if self.min_deg > 0 {
            acc = acc.mul(&h.pow(self.min_deg)?);
        }
        Ok(acc.truncated(order))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> GSeries<S> {
        GSeries::new(
            self.min_deg,
            self.order,
            self.coeffs.iter().map(f).collect(),
        )
    }
}

impl<R: Ring> GSeries<Poly<R>> {
    /// Evaluate the polynomial coefficients at a fixed value.
    pub fn eval_poly_at(&self, x: &R) -> GSeries<R> {
        self.map(|p| p.eval(x))
    }

    /// Solve f(E(g), g) = target for E(g), given f(E, g) = E + O(g).
    ///
    /// Newton iteration on the truncated-series ring; each step doubles the
    /// trusted order, and the final substitution check is exact.
    pub fn revert_for_target(&self, target: &R) -> Result<GSeries<R>> {
        if self.min_deg < 0 {
            return Err(Error::NonInvertibleLeading(
                "reversion requires a regular series".into(),
            ));
        }
        let order = self.order;
        let fprime = self.map(|p| p.derivative());
        // ∂f/∂E at g = 0 must be invertible (f = E + O(g) has it equal to 1).
        let lead = fprime.coeff(0);
        if lead.try_inv().is_none() {
            return Err(Error::NonInvertibleLeading(
                "vanishing ∂f/∂E at leading order".into(),
            ));
        }
        let tgt = GSeries::constant(target.clone(), order);
        let mut e = tgt.clone();
        let mut trusted: i64 = 0;
        while trusted < order {
            let f_at = self.subst_poly_series(&e);
            let fp_at = fprime.subst_poly_series(&e);
            let delta = f_at.sub(&tgt).div(&fp_at)?;
            e = e.sub(&delta).truncated(order);
            trusted = (2 * trusted + 1).min(order);
        }
        Ok(e)
    }

    /// Substitute a regular series (in g) for the polynomial variable.
    ///
    /// The result's coefficients live in R; this is the workhorse for
    /// evaluating B(E(g), g) with E(g) itself a series.
    pub fn subst_poly_series(&self, e: &GSeries<R>) -> GSeries<R> {
        let order = self.order.min(e.order);
        let mut acc = GSeries::<R>::zero(order);
        // Powers of e, built incrementally; degree of coefficients is small.
        let max_deg = self
            .coeffs
            .iter()
            .filter_map(|p| p.degree())
            .max()
            .unwrap_or(0);
        let mut epows: Vec<GSeries<R>> = Vec::with_capacity(max_deg + 1);
        epows.push(GSeries::constant(R::one(), order));
        for k in 1..=max_deg {
            let prev = &epows[k - 1];
            epows.push(prev.mul(e).truncated(order));
        }
        for (i, p) in self.coeffs.iter().enumerate() {
            let gdeg = self.min_deg + i as i64;
            if gdeg > order {
                break;
            }
            let mut c = GSeries::<R>::zero(order);
            for (d, a) in p.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                c = c.add(&epows[d].scale(a));
            }
            acc = acc.add(&c.shift(gdeg).truncated(order));
        }
        acc
    }
}

impl<R: Ring> Ring for GSeries<R> {
    fn zero() -> Self {
        GSeries::zero(i64::MAX / 4)
    }
    fn one() -> Self {
        GSeries::constant(R::one(), i64::MAX / 4)
    }
    fn is_zero(&self) -> bool {
        GSeries::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        GSeries::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        GSeries::sub(self, other)
    }
    fn neg(&self) -> Self {
        GSeries::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        GSeries::mul(self, other)
    }
    fn mul_q(&self, q: &Rational) -> Self {
        GSeries::mul_q(self, q)
    }
    fn from_q(q: Rational) -> Self {
        GSeries::constant(R::from_q(q), i64::MAX / 4)
    }
    fn try_inv(&self) -> Option<Self> {
        GSeries::inverse(self).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Rational;

    type S = GSeries<Rational>;

    fn s(min: i64, order: i64, v: &[i64]) -> S {
        S::new(min, order, v.iter().map(|&n| Rational::from(n)).collect())
    }

    #[test]
    fn difference_of_squares() {
        let a = s(0, 8, &[1, 1]);
        let b = s(0, 8, &[1, -1]);
        assert_eq!(a.mul(&b), s(0, 8, &[1, 0, -1]));
    }

    #[test]
    fn exp_log_inverse_pair() {
        let one_plus_g = s(0, 10, &[1, 1]);
        let back = one_plus_g.log().unwrap().exp().unwrap();
        assert_eq!(back, one_plus_g);
    }

    #[test]
    fn factorial_series_reciprocal() {
        // Σ n! g^n times its formal reciprocal is 1 at order 10.
        let mut f = vec![Rational::from(1)];
        for n in 1..=10i64 {
            let prev = f.last().unwrap().clone();
            f.push(prev * Rational::from(n));
        }
        let f = S::new(0, 10, f);
        let r = f.inverse().unwrap();
        assert_eq!(f.mul(&r), S::constant(Rational::from(1), 10));
    }

    #[test]
    fn compose_identity() {
        let f = s(0, 6, &[2, 3, 5]);
        let id = s(1, 6, &[1]);
        assert_eq!(f.compose(&id).unwrap(), f);
    }

    #[test]
    fn singular_mul_tracks_order() {
        // (1/g)·(g-series of order 6) is only known to order 5.
        let a = s(-1, 6, &[1]);
        let b = s(0, 6, &[1, 1, 1, 1, 1, 1, 1]);
        let p = a.mul(&b);
        assert_eq!(p.order, 5);
        assert_eq!(p.min_deg, -1);
    }
}
