//! Exact coefficient ring: multivariate polynomials over arbitrary-size
//! rationals in a small set of transcendental symbols.
//!
//! The core symbols are Euler's constant γ and the zeta values ζ(2), ζ(3), …
//! (π² is stored as 6ζ(2) and only rendered as a π²-multiple on output).
//! A few auxiliary symbols are carried for internal computations that must
//! stay exact until cancellations have happened: ln 2, the angular-momentum
//! parameter j, cos φ for Bloch angles, and the formal logarithms ln ε, ln g
//! used while matching WKB contour expansions.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use rug::{Float, Integer, Rational};
use serde::{Deserialize, Serialize};

/// Hard cap on the zeta weights admitted by the Γ-expansion tables.
pub const KMAX_DEFAULT: u32 = 8;

/// A transcendental (or formal) symbol of the coefficient ring.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Sym {
    /// Euler's constant γ = 0.5772156649…
    Gamma,
    /// ln 2 (appears in intermediate Γ-function expansions; cancels in results)
    Ln2,
    /// ζ(k) for k ≥ 2
    Zeta(u32),
    /// angular-momentum parameter j carried symbolically
    J,
    /// 2·cos φ for the Bloch angle of periodic potentials
    TwoCosPhi,
    /// formal ln ε used during WKB matching (must cancel before output)
    LnEps,
    /// formal ln g used during WKB matching (must cancel before output)
    LnG,
}

impl Sym {
    fn label(self) -> String {
        match self {
            Sym::Gamma => "gamma".into(),
            Sym::Ln2 => "ln2".into(),
            Sym::Zeta(k) => format!("zeta{k}"),
            Sym::J => "j".into(),
            Sym::TwoCosPhi => "2cosphi".into(),
            Sym::LnEps => "ln_eps".into(),
            Sym::LnG => "ln_g".into(),
        }
    }
}

/// A monomial: sorted list of (symbol, exponent) pairs with positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Monomial(pub Vec<(Sym, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(s: Sym) -> Self {
        Monomial(vec![(s, 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, s: Sym) -> u32 {
        self.0
            .iter()
            .find_map(|&(t, e)| (t == s).then_some(e))
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut map: BTreeMap<Sym, u32> = self.0.iter().copied().collect();
        for &(s, e) in &other.0 {
            *map.entry(s).or_insert(0) += e;
        }
        Monomial(map.into_iter().collect())
    }

    /// Total degree in the listed symbols.
    pub fn degree_in(&self, syms: &[Sym]) -> u32 {
        self.0
            .iter()
            .filter(|(s, _)| syms.contains(s))
            .map(|(_, e)| e)
            .sum()
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded-lexicographic order keyed on total degree, then the exponent vector.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let da: u32 = self.0.iter().map(|(_, e)| e).sum();
        let db: u32 = other.0.iter().map(|(_, e)| e).sum();
        da.cmp(&db).then_with(|| self.0.cmp(&other.0))
    }
}

/// Element of Q[γ, ln2, ζ2, ζ3, …, j, …]: a canonical map monomial → rational.
///
/// Invariant: no zero coefficients are stored; the map keys are canonical.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct ExactScalar {
    pub terms: BTreeMap<Monomial, Rational>,
}

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_q(Rational::from(1))
    }

    pub fn from_q(q: Rational) -> Self {
        let mut t = BTreeMap::new();
        if q != 0 {
            t.insert(Monomial::one(), q);
        }
        ExactScalar { terms: t }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_q(Rational::from(n))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::from_q(Rational::from((num, den)))
    }

    pub fn sym(s: Sym) -> Self {
        let mut t = BTreeMap::new();
        t.insert(Monomial::var(s), Rational::from(1));
        ExactScalar { terms: t }
    }

    /// γ as a ring element.
    pub fn gamma() -> Self {
        Self::sym(Sym::Gamma)
    }

    /// ζ(k) as a ring element; π² should be entered as 6ζ(2).
    pub fn zeta(k: u32) -> Self {
        Self::sym(Sym::Zeta(k))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The purely rational part (coefficient of the unit monomial).
    pub fn rational_part(&self) -> Rational {
        self.terms
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(|| Rational::from(0))
    }

    /// Whether the element is a plain rational (no symbols).
    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Extract a plain rational, if the element is symbol-free.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.rational_part())
        } else {
            None
        }
    }

    pub fn contains_sym(&self, s: Sym) -> bool {
        self.terms.keys().any(|m| m.exponent(s) > 0)
    }

    fn insert_term(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, q: Rational) {
        if q == 0 {
            return;
        }
        match terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = Rational::from(o.get() + &q);
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, q) in &other.terms {
            Self::insert_term(&mut terms, m.clone(), q.clone());
        }
        ExactScalar { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        ExactScalar {
            terms: self
                .terms
                .iter()
                .map(|(m, q)| (m.clone(), Rational::from(-q.clone())))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (ma, qa) in &self.terms {
            for (mb, qb) in &other.terms {
                Self::insert_term(&mut terms, ma.mul(mb), Rational::from(qa * qb));
            }
        }
        ExactScalar { terms }
    }

    pub fn mul_q(&self, q: &Rational) -> Self {
        if *q == 0 {
            return Self::zero();
        }
        ExactScalar {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), Rational::from(c * q)))
                .collect(),
        }
    }

    pub fn div_q(&self, q: &Rational) -> Self {
        assert!(*q != 0, "division of ExactScalar by zero rational");
        self.mul_q(&Rational::from(q.clone().recip()))
    }

    /// Substitute a rational value for a symbol (used to instantiate j, 2cos φ).
    pub fn subst_sym_q(&self, s: Sym, val: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, q) in &self.terms {
            let e = m.exponent(s);
            let rest = Monomial(m.0.iter().copied().filter(|(t, _)| *t != s).collect());
            let mut coeff = q.clone();
            for _ in 0..e {
                coeff *= val;
            }
            Self::insert_term(&mut out.terms, rest, coeff);
        }
        out
    }

    /// The coefficient of `s^k` as a scalar in the remaining symbols.
    pub fn coeff_of_sym(&self, s: Sym, k: u32) -> Self {
        let mut out = Self::zero();
        for (m, q) in &self.terms {
            if m.exponent(s) == k {
                let rest = Monomial(m.0.iter().copied().filter(|(t, _)| *t != s).collect());
                Self::insert_term(&mut out.terms, rest, q.clone());
            }
        }
        out
    }

    pub fn max_sym_degree(&self, s: Sym) -> u32 {
        self.terms.keys().map(|m| m.exponent(s)).max().unwrap_or(0)
    }

    /// Numeric evaluation at `prec` bits. Symbol values: γ, ln 2 and ζ(k) are
    /// evaluated with MPFR; j, 2cos φ, ln ε, ln g must have been substituted
    /// away beforehand (panics otherwise).
    pub fn eval(&self, prec: u32) -> Float {
        // Guard precision so intermediate products keep the target accuracy.
        let wp = prec + 32;
        let mut acc = Float::with_val(wp, 0);
        for (m, q) in &self.terms {
            let mut term = Float::with_val(wp, q);
            for &(s, e) in &m.0 {
                let base = match s {
                    Sym::Gamma => Float::with_val(wp, rug::float::Constant::Euler),
                    Sym::Ln2 => Float::with_val(wp, rug::float::Constant::Log2),
                    Sym::Zeta(k) => Float::with_val(wp, Float::zeta_u(k)),
                    other => panic!("ExactScalar::eval: unbound symbol {other:?}"),
                };
                for _ in 0..e {
                    term *= &base;
                }
            }
            acc += term;
        }
        Float::with_val(prec, acc)
    }

    /// Render in the paper's display convention: rationals as p/q, γ as
    /// `gamma`, ζ(2)-powers folded into π²-multiples where exact.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, q) in &self.terms {
            let mut factors = Vec::new();
            let mut coeff = q.clone();
            for &(s, e) in &m.0 {
                match s {
                    Sym::Zeta(2) => {
                        // ζ2^e = (π²/6)^e
                        for _ in 0..e {
                            coeff /= 6;
                        }
                        factors.push(if e == 1 {
                            "pi^2".to_string()
                        } else {
                            format!("pi^{}", 2 * e)
                        });
                    }
                    _ => factors.push(if e == 1 {
                        s.label()
                    } else {
                        format!("{}^{}", s.label(), e)
                    }),
                }
            }
            let mut s = render_q(&coeff);
            if !factors.is_empty() {
                if s == "1" {
                    s = factors.join("*");
                } else if s == "-1" {
                    s = format!("-{}", factors.join("*"));
                } else {
                    s = format!("{}*{}", s, factors.join("*"));
                }
            }
            parts.push(s);
        }
        let mut out = String::new();
        for (i, p) in parts.iter().enumerate() {
            if i == 0 {
                out.push_str(p);
            } else if let Some(stripped) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }
}

pub fn render_q(q: &Rational) -> String {
    if q.denom() == &Integer::from(1) {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn ring_basics() {
        let g = ExactScalar::gamma();
        let z3 = ExactScalar::zeta(3);
        let a = g.mul(&z3).add(&ExactScalar::from_frac(1, 2));
        let b = a.sub(&a);
        assert!(b.is_zero());
        // (γζ3 + 1/2)² = γ²ζ3² + γζ3 + 1/4
        let sq = a.mul(&a);
        let gz = Monomial(vec![(Sym::Gamma, 2), (Sym::Zeta(3), 2)]);
        assert_eq!(sq.terms.get(&gz), Some(&q(1, 1)));
        assert_eq!(sq.terms.get(&Monomial::one()), Some(&q(1, 4)));
    }

    #[test]
    fn eval_matches_constants() {
        // γ + ζ(2)/6 should equal γ + π²/36 numerically
        let x = ExactScalar::gamma().add(&ExactScalar::zeta(2).mul_q(&q(1, 6)));
        let v = x.eval(100);
        let expect = Float::with_val(120, rug::float::Constant::Euler)
            + Float::with_val(120, rug::float::Constant::Pi).square() / 36u32;
        let diff = (v - expect).abs();
        assert!(diff < Float::with_val(64, 1e-25));
    }

    #[test]
    fn substitute_j() {
        // j² − 1 at j = 3 → 8
        let j2 = ExactScalar::sym(Sym::J).mul(&ExactScalar::sym(Sym::J));
        let e = j2.sub(&ExactScalar::one());
        let v = e.subst_sym_q(Sym::J, &q(3, 1));
        assert_eq!(v.as_rational(), Some(q(8, 1)));
    }

    #[test]
    fn render_pi_convention() {
        // 6ζ2 · 1/12 renders as a π² multiple: π²/12
        let x = ExactScalar::zeta(2).mul_q(&q(1, 2));
        assert_eq!(x.render(), "1/12*pi^2");
    }
}
