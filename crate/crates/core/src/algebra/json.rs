//! Canonical JSON forms for the exact types, for golden-file tests and the
//! CLI's machine output.
//!
//! Rationals are rendered as "p/q" strings, monomials as sorted
//! symbol→exponent maps, and series as {degree: coefficient} objects with
//! degrees in increasing order. The encoding is deterministic across runs
//! and platforms.

use rug::Rational;
use serde_json::{json, Map, Value};

use super::gseries::GSeries;
use super::poly::Poly;

use super::scalar::{render_q, ExactScalar};

pub fn q_to_json(q: &Rational) -> Value {
    Value::String(render_q(q))
}

pub fn q_from_str(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((p, d)) = s.split_once('/') {
        let p: rug::Integer = p.trim().parse().ok()?;
        let d: rug::Integer = d.trim().parse().ok()?;
        if d == 0 {
            return None;
        }
        Some(Rational::from((p, d)))
    } else {
        let p: rug::Integer = s.parse().ok()?;
        Some(Rational::from(p))
    }
}

pub fn scalar_to_json(x: &ExactScalar) -> Value {
    let mut terms = Vec::new();
    for (m, q) in &x.terms {
        let mut mono = Map::new();
        for &(s, e) in &m.0 {
            mono.insert(format!("{s:?}").to_lowercase(), json!(e));
        }
        terms.push(json!({ "monomial": Value::Object(mono), "coeff": render_q(q) }));
    }
    json!({ "terms": terms })
}

pub trait ToJsonCoeff {
    fn coeff_json(&self) -> Value;
}

impl ToJsonCoeff for Rational {
    fn coeff_json(&self) -> Value {
        q_to_json(self)
    }
}

impl ToJsonCoeff for ExactScalar {
    fn coeff_json(&self) -> Value {
        if let Some(q) = self.as_rational() {
            q_to_json(&q)
        } else {
            scalar_to_json(self)
        }
    }
}

impl<R: crate::algebra::ring::Ring + ToJsonCoeff> ToJsonCoeff for Poly<R> {
    fn coeff_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(|c| c.coeff_json()).collect())
    }
}

pub fn gseries_to_json<R: crate::algebra::ring::Ring + ToJsonCoeff>(s: &GSeries<R>) -> Value {
    let mut terms = Vec::new();
    for (i, c) in s.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let d = s.min_deg + i as i64;
        terms.push(json!({ "power": d, "coeff": c.coeff_json() }));
    }
    json!({ "order": s.order, "terms": terms })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        let q = Rational::from((-35, 4));
        assert_eq!(q_to_json(&q), Value::String("-35/4".into()));
        assert_eq!(q_from_str("-35/4"), Some(q));
        assert_eq!(q_from_str("7"), Some(Rational::from(7)));
        assert_eq!(q_from_str("1/0"), None);
    }

    #[test]
    fn deterministic_scalar_encoding() {
        let x = ExactScalar::gamma()
            .mul(&ExactScalar::zeta(3))
            .add(&ExactScalar::from_frac(-1, 2));
        let a = serde_json::to_string(&scalar_to_json(&x)).unwrap();
        let b = serde_json::to_string(&scalar_to_json(&x)).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("zeta(3)") || a.contains("zeta3"));
    }
}
