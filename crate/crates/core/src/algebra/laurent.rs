//! Truncated Laurent series: finitely many negative powers, coefficients
//! known up to an explicit truncation cap.
//!
//! The Riccati recursions run on these with coefficients that are
//! polynomials in E (and possibly j); the residue is the coefficient of
//! degree −1 and is read off in O(1).

use rug::Rational;
use serde::{Deserialize, Serialize};

use super::ring::Ring;

/// f = Σ_{k=min_deg}^{cap} coeffs[k−min_deg] · v^k. Coefficients above `cap`
/// are unknown (truncated away); leading/trailing zeros inside the window are
/// kept implicitly canonicalized.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Laurent<R: Ring> {
    pub var: char,
    pub min_deg: i64,
    pub cap: i64,
    pub coeffs: Vec<R>,
}

impl<R: Ring> Laurent<R> {
    pub fn new(var: char, min_deg: i64, cap: i64, mut coeffs: Vec<R>) -> Self {
        assert!(cap >= min_deg - 1, "cap below min_deg");
        let want = (cap - min_deg + 1) as usize;
        coeffs.resize(want, R::zero());
        let mut s = Laurent {
            var,
            min_deg,
            cap,
            coeffs,
        };
        s.normalize();
        s
    }

    pub fn zero(var: char, cap: i64) -> Self {
        Laurent {
            var,
            min_deg: cap + 1,
            cap,
            coeffs: vec![],
        }
    }

    pub fn monomial(var: char, deg: i64, cap: i64, c: R) -> Self {
        if deg > cap || c.is_zero() {
            return Self::zero(var, cap);
        }
        Laurent {
            var,
            min_deg: deg,
            cap,
            coeffs: vec![c],
        }
    }

    fn normalize(&mut self) {
        while self.coeffs.first().is_some_and(R::is_zero) {
            self.coeffs.remove(0);
            self.min_deg += 1;
        }
        while self.coeffs.last().is_some_and(R::is_zero) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.min_deg = self.cap + 1;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, deg: i64) -> R {
        if deg < self.min_deg {
            return R::zero();
        }
        let idx = (deg - self.min_deg) as usize;
        self.coeffs.get(idx).cloned().unwrap_or_else(R::zero)
    }

    /// Coefficient of v^{−1}.
    pub fn residue(&self) -> R {
        self.coeff(-1)
    }

    pub fn max_deg(&self) -> i64 {
        self.min_deg + self.coeffs.len() as i64 - 1
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.var, other.var);
        let cap = self.cap.min(other.cap);
        if self.is_zero() {
            let mut o = other.clone();
            o.truncate(cap);
            return o;
        }
        if other.is_zero() {
            let mut s = self.clone();
            s.truncate(cap);
            return s;
        }
        let min = self.min_deg.min(other.min_deg);
        let max = self.max_deg().max(other.max_deg()).min(cap);
        let mut out = vec![R::zero(); (max - min + 1).max(0) as usize];
        for (i, slot) in out.iter_mut().enumerate() {
            let d = min + i as i64;
            *slot = self.coeff(d).add(&other.coeff(d));
        }
        Laurent::new(self.var, min, cap, out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Laurent {
            var: self.var,
            min_deg: self.min_deg,
            cap: self.cap,
            coeffs: self.coeffs.iter().map(R::neg).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.var, other.var);
        // When a factor has negative valuation, products of dropped high-order
        // terms of one factor with the singular head of the other would land
        // inside the window; shrink the cap accordingly so every retained
        // coefficient is exact.
        let cap = (self.cap + other.min_deg.min(0))
            .min(other.cap + self.min_deg.min(0));
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.var, cap);
        }
        let min = self.min_deg + other.min_deg;
        let max = (self.max_deg() + other.max_deg()).min(cap);
        if max < min {
            return Self::zero(self.var, cap);
        }
        let mut out = vec![R::zero(); (max - min + 1) as usize];
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
                if d > max {
                    break;
                }
                let idx = (d - min) as usize;
                out[idx] = out[idx].add(&a.mul(b));
            }
        }
        Laurent::new(self.var, min, cap, out)
    }

    pub fn mul_q(&self, q: &Rational) -> Self {
        Laurent {
            var: self.var,
            min_deg: self.min_deg,
            cap: self.cap,
            coeffs: self.coeffs.iter().map(|c| c.mul_q(q)).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut s = Laurent {
            var: self.var,
            min_deg: self.min_deg,
            cap: self.cap,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        };
        s.normalize();
        s
    }

    /// Derivative with respect to the series variable.
    pub fn derivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            let d = self.min_deg + i as i64;
            out.push(c.mul_q(&Rational::from(d)));
        }
        // d/dv(v^cap) = cap·v^{cap−1}: the derivative is exact one order lower.
        Laurent::new(self.var, self.min_deg - 1, self.cap - 1, {
            // shift: coefficient of v^{d} becomes coefficient of v^{d−1}
            out
        })
    }

    /// Multiplicative inverse of a series whose lowest term is invertible.
    ///
    /// The result has valuation −val and its coefficients are exact up to
    /// absolute degree cap − 2·val (inversion of a singular head gains
    /// orders, inversion of a vanishing head loses them).
    pub fn inverse(&self) -> Option<Self> {
        let lead = self.coeffs.first()?;
        let lead_inv = lead.try_inv()?;
        let val = self.min_deg;
        // Write self = lead·v^val·(1 + t); t is known to relative order cap − val.
        let n = (self.cap - val).max(0) as usize + 1;
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
        Some(Laurent::new(self.var, -val, self.cap - 2 * val, coeffs))
    }

    pub fn truncate(&mut self, cap: i64) {
        if cap < self.cap {
            self.cap = cap;
            let keep = (cap - self.min_deg + 1).max(0) as usize;
            self.coeffs.truncate(keep);
            self.normalize();
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Laurent<S> {
        Laurent::new(
            self.var,
            self.min_deg,
            self.cap,
            self.coeffs.iter().map(f).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Rational;

    fn l(min: i64, cap: i64, v: &[i64]) -> Laurent<Rational> {
        Laurent::new('q', min, cap, v.iter().map(|&n| Rational::from(n)).collect())
    }

    #[test]
    fn residue_defining_case() {
        // 1/q → residue 1
        assert_eq!(l(-1, 5, &[1]).residue(), Rational::from(1));
        // q² + 3 → residue 0
        assert_eq!(l(0, 5, &[3, 0, 1]).residue(), Rational::from(0));
    }

    #[test]
    fn long_division_residue() {
        // 1/(q(1−q)) = (1/q)·(1+q+q²+…) → residue 1
        let denom = l(1, 8, &[1, -1]); // q − q²
        let inv = denom.inverse().unwrap();
        assert_eq!(inv.residue(), Rational::from(1));
        assert_eq!(inv.coeff(0), Rational::from(1));
        assert_eq!(inv.coeff(3), Rational::from(1));
    }

    #[test]
    fn mul_respects_cap_with_singular_heads() {
        let a = l(-2, 6, &[1, 0, 1]); // q^{-2} + 1
        let b = l(0, 6, &[1, 1]); // 1 + q
        let p = a.mul(&b);
        assert_eq!(p.cap, 4); // 6 + (−2)
        assert_eq!(p.coeff(-2), Rational::from(1));
        assert_eq!(p.coeff(-1), Rational::from(1));
    }

    #[test]
    fn derivative_shifts() {
        let a = l(-1, 5, &[2, 0, 3]); // 2/q + 3q
        let d = a.derivative();
        assert_eq!(d.coeff(-2), Rational::from(-2));
        assert_eq!(d.coeff(0), Rational::from(3));
    }
}
