//! Potential specifications, the ρ(U) = U′² parameterization, and the
//! instanton constants a, C, C_ω.
//!
//! Conventions follow H = −(g/2) d²/dq² + V(q)/g with V(q) = q²/2 + O(q³)
//! at the first minimum. The square root U = √(2V) is taken uniform at both
//! minima and positive between them; for the quartic double well
//! U(q) = q(1−q).

use rug::{Float, Rational};
use serde::{Deserialize, Serialize};

use crate::algebra::gseries::GSeries;
use crate::algebra::poly::QPoly;
use crate::algebra::ring::Ring;
use crate::error::{Error, Result};
use crate::numeric::quad::tanh_sinh;

mod constants;
mod series;

pub use constants::{instanton_constants, omega_c_constant, InstantonConstants};
pub use series::{invert_unit_series, rho_series_from_v, u_series_from_rho};

/// Parameterization of a potential with degenerate minima.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Potential {
    /// ρ(U) = 1 + α₁U + … + α_M U^M; the quartic double well is α = (−4).
    Rho { alpha: Vec<String> },
    /// ρ(u) = 1 − 4u^m; m = 1 double well, m = 2 cosine, m ∈ {3,4,6} elliptic.
    ClassM { m: u32 },
    /// Symmetric or asymmetric polynomial well: U(q) given as a polynomial
    /// with U(0) = 0, U(q0) = 0, U′(0) = 1, |U′(q0)| = ω.
    PolyWell { u: Vec<String>, q0: String },
    /// The periodic cosine potential V = (1 − cos 4q)/16.
    Cosine,
    /// Radial quartic r²/2 + r⁴ with the centrifugal parameter j carried
    /// symbolically; negative coupling is handled by sign substitution.
    Radial,
}

impl Potential {
    pub fn double_well() -> Self {
        Potential::Rho {
            alpha: vec!["-4".into()],
        }
    }

    pub fn cosine() -> Self {
        Potential::Cosine
    }

    pub fn alpha(&self) -> Result<Vec<Rational>> {
        match self {
            Potential::Rho { alpha } => alpha
                .iter()
                .map(|s| {
                    crate::algebra::json::q_from_str(s)
                        .ok_or_else(|| Error::InvalidArgument(format!("bad rational '{s}'")))
                })
                .collect(),
            Potential::ClassM { m } => {
                let mut a = vec![Rational::new(); *m as usize];
                a[*m as usize - 1] = Rational::from(-4);
                Ok(a)
            }
            _ => Err(Error::UnsupportedPotential(
                "ρ-polynomial form not available".into(),
            )),
        }
    }

    /// ρ(u) as a truncated power series (index = power of u), to `order`.
    pub fn rho_series(&self, order: usize) -> Result<Vec<Rational>> {
        match self {
            Potential::Rho { .. } | Potential::ClassM { .. } => {
                let alpha = self.alpha()?;
                let mut rho = vec![Rational::new(); order + 1];
                rho[0] = Rational::from(1);
                for (i, a) in alpha.iter().enumerate() {
                    if i + 1 <= order {
                        rho[i + 1] = a.clone();
                    }
                }
                Ok(rho)
            }
            Potential::Cosine => Potential::ClassM { m: 2 }.rho_series(order),
            Potential::Radial => {
                // V = r²/2 + r⁴: v-Taylor (2V = r² + 2r⁴) → ρ via inversion
                let mut v2 = vec![Rational::new(); (order + 3).max(5)];
                v2[2] = Rational::from((1, 2));
                v2[4] = Rational::from(1);
                rho_series_from_v(&v2, order)
            }
            Potential::PolyWell { .. } => {
                let u = self.u_poly()?;
                let mut v = vec![Rational::new(); 2 * u.coeffs.len() + 2];
                let u2 = u.mul(&u);
                for (i, c) in u2.coeffs.iter().enumerate() {
                    if i < v.len() {
                        v[i] = Rational::from(c / 2u32);
                    }
                }
                rho_series_from_v(&v, order)
            }
        }
    }

    /// U(q) as a polynomial for families where it is one.
    pub fn u_poly(&self) -> Result<QPoly> {
        match self {
            Potential::Rho { alpha } if alpha.len() == 1 && alpha[0] == "-4" => {
                // U = q(1−q)
                Ok(QPoly::new(vec![
                    Rational::new(),
                    Rational::from(1),
                    Rational::from(-1),
                ]))
            }
            Potential::ClassM { m: 1 } => Potential::double_well().u_poly(),
            Potential::PolyWell { u, .. } => {
                let coeffs: Option<Vec<Rational>> = u
                    .iter()
                    .map(|s| crate::algebra::json::q_from_str(s))
                    .collect();
                Ok(QPoly::new(coeffs.ok_or_else(|| {
                    Error::InvalidArgument("bad rational in U polynomial".into())
                })?))
            }
            _ => Err(Error::UnsupportedPotential(
                "no polynomial U for this family".into(),
            )),
        }
    }

    /// Position of the second minimum, where known in closed form.
    pub fn q0(&self) -> Result<PositionQ0> {
        match self {
            Potential::Rho { alpha } if alpha.len() == 1 && alpha[0] == "-4" => {
                Ok(PositionQ0::Rational(Rational::from(1)))
            }
            Potential::ClassM { m: 1 } => Ok(PositionQ0::Rational(Rational::from(1))),
            Potential::ClassM { m: 2 } | Potential::Cosine => Ok(PositionQ0::HalfPi),
            Potential::PolyWell { q0, .. } => crate::algebra::json::q_from_str(q0)
                .map(PositionQ0::Rational)
                .ok_or_else(|| Error::InvalidArgument("bad q0".into())),
            _ => Err(Error::UnsupportedPotential(
                "second minimum not available in closed form".into(),
            )),
        }
    }

    /// Numeric V(q); errors for families without a closed form.
    pub fn v_at(&self, q: &Float) -> Result<Float> {
        let prec = q.prec();
        match self {
            Potential::Rho { alpha } if alpha.len() == 1 && alpha[0] == "-4" => {
                let one_minus = Float::with_val(prec, 1 - q.clone());
                Ok(Float::with_val(prec, q * &one_minus).square() / 2u32)
            }
            Potential::ClassM { m: 1 } => Potential::double_well().v_at(q),
            Potential::ClassM { m: 2 } | Potential::Cosine => {
                let c = Float::with_val(prec, q * 4u32).cos();
                Ok((Float::with_val(prec, 1) - c) / 16u32)
            }
            Potential::PolyWell { .. } => {
                let u = self.u_poly()?;
                let mut acc = Float::new(prec);
                for c in u.coeffs.iter().rev() {
                    acc = acc * q + Float::with_val(prec, c);
                }
                Ok(acc.square() / 2u32)
            }
            Potential::Radial => {
                let q2 = q.clone().square();
                Ok(Float::with_val(prec, &q2 / 2u32) + q2.square())
            }
            _ => Err(Error::UnsupportedPotential(
                "no closed-form V for numeric evaluation".into(),
            )),
        }
    }

    /// numeric U = √(2V) with the uniform positive branch between the minima.
    pub fn u_at(&self, q: &Float) -> Result<Float> {
        let prec = q.prec();
        match self {
            Potential::Rho { alpha } if alpha.len() == 1 && alpha[0] == "-4" => {
                Ok(Float::with_val(prec, 1 - q.clone()) * q)
            }
            Potential::ClassM { m: 1 } => Potential::double_well().u_at(q),
            Potential::ClassM { m: 2 } | Potential::Cosine => {
                Ok(Float::with_val(prec, q * 2u32).sin() / 2u32)
            }
            Potential::PolyWell { .. } => {
                let u = self.u_poly()?;
                let mut acc = Float::new(prec);
                for c in u.coeffs.iter().rev() {
                    acc = acc * q + Float::with_val(prec, c);
                }
                Ok(acc)
            }
            _ => {
                let v = self.v_at(q)?;
                Ok(Float::with_val(prec, v * 2u32).sqrt())
            }
        }
    }

    /// Curvature ratio ω = |U′(q0)| (1 for symmetric wells).
    pub fn omega(&self) -> Result<Rational> {
        match self {
            Potential::PolyWell { .. } => {
                let u = self.u_poly()?;
                let q0 = match self.q0()? {
                    PositionQ0::Rational(q) => q,
                    PositionQ0::HalfPi => {
                        return Err(Error::UnsupportedPotential("irrational q0".into()))
                    }
                };
                let d = u.derivative().eval(&q0);
                Ok(if d < 0 { -d } else { d })
            }
            _ => Ok(Rational::from(1)),
        }
    }
}

/// Location of the second minimum.
#[derive(Clone, Debug, PartialEq)]
pub enum PositionQ0 {
    Rational(Rational),
    /// π/2, for the cosine potential
    HalfPi,
}

impl PositionQ0 {
    pub fn to_float(&self, prec: u32) -> Float {
        match self {
            PositionQ0::Rational(q) => Float::with_val(prec, q),
            PositionQ0::HalfPi => Float::with_val(prec, rug::float::Constant::Pi) / 2u32,
        }
    }
}

/// Taylor coefficients of V(q) at the origin, from the ρ-parameterization.
///
/// Solves U′² = ρ(U) for U = q + O(q²), then V = U²/2;
/// index = power of q.
pub fn v_taylor(pot: &Potential, order: usize) -> Result<Vec<Rational>> {
    let rho = pot.rho_series(order)?;
    let u = u_series_from_rho(&rho, order)?;
    let us = GSeries::new(0, order as i64, u);
    let u2 = us.mul(&us).mul_q(&Rational::from((1, 2)));
    let mut out = vec![Rational::new(); order + 1];
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = u2.coeff(i as i64);
    }
    Ok(out)
}

/// (g, ω1, ω2) → (g/ω1, ω2/ω1): spectra scale by the overall factor ω1.
pub fn omega_normalize(g: &Float, omega1: &Float, omega2: &Float) -> (Float, Float) {
    let prec = g.prec();
    (
        Float::with_val(prec, g / omega1),
        Float::with_val(prec, omega2 / omega1),
    )
}

/// a = 2∫₀^{q0} √(2V) dq by tanh-sinh quadrature.
pub fn action_quadrature(pot: &Potential, prec: u32) -> Result<Float> {
    use rug::ops::Pow;
    let q0 = pot.q0()?.to_float(prec);
    let eps = Float::with_val(prec, Float::with_val(prec, 2).pow(-(prec as i32) + 8));
    let zero = Float::new(prec);
    let val = tanh_sinh(
        |q| match pot.u_at(q) {
            Ok(u) => u,
            Err(_) => Float::new(prec),
        },
        &zero,
        &q0,
        prec,
        &eps,
    )?;
    Ok(val * 2u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn v_taylor_single_alpha() {
        // α = (α1, 0, 0, 0): q⁴ coefficient is α1²/32; take α1 = 3.
        let pot = Potential::Rho {
            alpha: vec!["3".into(), "0".into(), "0".into(), "0".into()],
        };
        let v = v_taylor(&pot, 6).unwrap();
        assert_eq!(v[2], q(1, 2));
        assert_eq!(v[3], q(3, 4)); // α1/4
        assert_eq!(v[4], q(9, 32)); // α1²/32
    }

    #[test]
    fn v_taylor_harmonic() {
        let pot = Potential::Rho { alpha: vec![] };
        let v = v_taylor(&pot, 8).unwrap();
        assert_eq!(v[2], q(1, 2));
        for k in [0usize, 1, 3, 4, 5, 6, 7, 8] {
            assert_eq!(v[k], 0, "coefficient {k}");
        }
    }

    #[test]
    fn v_taylor_double_well() {
        // α = (−4) is U = q(1−q): V = q²/2 − q³ + q⁴/2 exactly.
        let v = v_taylor(&Potential::double_well(), 8).unwrap();
        assert_eq!(v[2], q(1, 2));
        assert_eq!(v[3], q(-1, 1));
        assert_eq!(v[4], q(1, 2));
        for k in [5usize, 6, 7, 8] {
            assert_eq!(v[k], 0, "coefficient {k}");
        }
    }

    #[test]
    fn general_v_expansion_matches_closed_form() {
        // Full two-parameter check of the q⁴..q⁶ closed form.
        let a1 = q(2, 3);
        let a2 = q(-5, 7);
        let a3 = q(1, 2);
        let a4 = q(3, 5);
        let pot = Potential::Rho {
            alpha: vec!["2/3".into(), "-5/7".into(), "1/2".into(), "3/5".into()],
        };
        let v = v_taylor(&pot, 6).unwrap();
        let c4 = q(1, 6) * &a2 + q(1, 32) * a1.clone().square();
        let c5 = q(1, 16) * Rational::from(&a1 * &a2) + q(1, 8) * &a3;
        let c6 = q(3, 80) * Rational::from(&a1 * &a3)
            + q(1, 45) * a2.clone().square()
            + q(1, 10) * &a4
            + q(1, 4)
                * Rational::from(
                    &a1 * &(q(1, 48) * Rational::from(&a1 * &a2) + q(1, 8) * &a3),
                );
        assert_eq!(v[4], c4);
        assert_eq!(v[5], c5);
        assert_eq!(v[6], c6);
    }

    #[test]
    fn omega_normalize_direct() {
        let g = Float::with_val(64, 0.2);
        let (gn, wn) = omega_normalize(&g, &Float::with_val(64, 2), &Float::with_val(64, 4));
        assert!((gn.to_f64() - 0.1).abs() < 1e-15);
        assert!((wn.to_f64() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn radial_rho_series() {
        // V = r²/2 + r⁴ → ρ = 1 + 6u² − 8u⁴ + …
        let rho = Potential::Radial.rho_series(6).unwrap();
        assert_eq!(rho[0], q(1, 1));
        assert_eq!(rho[1], q(0, 1));
        assert_eq!(rho[2], q(6, 1));
    }
}
