//! Exact expansions of the Γ-function around integers and its poles, with
//! coefficients in Q[γ, ζ2, ζ3, …].
//!
//! Everything is driven by lnΓ(1+δ) = −γδ + Σ_{k≥2} (−1)^k ζ(k) δ^k / k,
//! exponentiated formally; pole expansions use the recurrence Γ(z+1) = zΓ(z).

use rug::Rational;

use super::gseries::GSeries;
use super::scalar::ExactScalar;
use crate::error::{Error, Result};

/// Series in δ (as a `GSeries` with δ playing the role of g).
pub type DeltaSeries = GSeries<ExactScalar>;

/// lnΓ(1+δ) up to (and including) δ^order.
pub fn log_gamma_one_plus(order: i64, kmax: u32) -> Result<DeltaSeries> {
    if order >= 2 && order as u32 > kmax {
        return Err(Error::ZetaTableExceeded {
            kmax,
            order: order as u32,
        });
    }
    let mut coeffs = vec![ExactScalar::zero(), ExactScalar::gamma().neg()];
    for k in 2..=order {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        coeffs.push(ExactScalar::zeta(k as u32).mul_q(&Rational::from((sign, k))));
    }
    Ok(GSeries::new(0, order, coeffs))
}

/// Γ(1+δ) = exp(lnΓ(1+δ)) up to δ^order.
pub fn gamma_one_plus(order: i64, kmax: u32) -> Result<DeltaSeries> {
    log_gamma_one_plus(order, kmax)?.exp()
}

/// Γ(1+n+δ) for integer n ≥ 0, up to δ^order: n!·exp(ψ(n+1)δ + Σ …).
///
/// Uses the Hurwitz-shifted zeta values ζ(k, n+1) = ζ(k) − Σ_{j≤n} j^{−k}
/// and ψ(n+1) = −γ + H_n, all exact.
pub fn gamma_shifted(n: u32, order: i64, kmax: u32) -> Result<DeltaSeries> {
    if order >= 2 && order as u32 > kmax {
        return Err(Error::ZetaTableExceeded {
            kmax,
            order: order as u32,
        });
    }
    let mut log = vec![ExactScalar::zero(), digamma_int(n + 1)];
    for k in 2..=order {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        // ζ(k, n+1) = ζ(k) − Σ_{j=1}^{n} j^{−k}
        let mut hz = ExactScalar::zeta(k as u32);
        for j in 1..=n as i64 {
            let mut jk = Rational::from(1);
            for _ in 0..k {
                jk *= j;
            }
            hz = hz.sub(&ExactScalar::from_q(jk.recip()));
        }
        log.push(hz.mul_q(&Rational::from((sign, k))));
    }
    let series = GSeries::new(0, order, log).exp()?;
    let mut fact = Rational::from(1);
    for j in 2..=n as i64 {
        fact *= j;
    }
    Ok(series.mul_q(&fact))
}

/// ψ(n+1) = −γ + H_n as an exact scalar.
pub fn digamma_int(n_plus: u32) -> ExactScalar {
    let n = n_plus.saturating_sub(1);
    let mut h = Rational::new();
    for j in 1..=n as i64 {
        h += Rational::from((1, j));
    }
    ExactScalar::gamma().neg().add(&ExactScalar::from_q(h))
}

/// Laurent expansion of Γ(−m−δ) in δ, from δ^{−1} through δ^order.
///
/// Built from Γ(−m−δ) = (−1)^{m+1} Γ(1−δ) / [δ·Π_{i=1}^{m}(i+δ)].
pub fn gamma_at_negative_integer(m: u32, order: i64, kmax: u32) -> Result<DeltaSeries> {
    let ord_i = order + 1;
    // Γ(1−δ): substitute δ → −δ in Γ(1+δ).
    let g1 = gamma_one_plus(ord_i, kmax)?;
    let g1m = flip_sign(&g1);
    // denominator δ·Π(i+δ); invert the regular factor, shift the δ exactly.
    let mut reg = GSeries::constant(ExactScalar::one(), ord_i);
    for i in 1..=m as i64 {
        let lin = GSeries::new(0, ord_i, vec![ExactScalar::from_int(i), ExactScalar::one()]);
        reg = reg.mul(&lin);
    }
    let sign = if m % 2 == 0 { -1 } else { 1 };
    Ok(g1m
        .mul(&reg.inverse()?)
        .shift(-1)
        .mul_q(&Rational::from(sign))
        .truncated(order))
}

/// 1/Γ(−n−β) expanded around a non-positive-integer argument, via the
/// reflection formula: (−1)^{n+1}·sin(πβ)/π·Γ(1+n+β). Starts at β^1.
pub fn inv_gamma_at_negative_integer(n: u32, order: i64, kmax: u32) -> Result<DeltaSeries> {
    let sinc = sin_pi_over_pi(order, kmax)?;
    let gs = gamma_shifted(n, order, kmax)?;
    let sign = if n % 2 == 0 { -1 } else { 1 };
    Ok(sinc.mul(&gs).mul_q(&Rational::from(sign)).truncated(order))
}

/// sin(πβ)/π = β·Σ_k (−1)^k π^{2k} β^{2k}/(2k+1)!, with π^{2k} = (6ζ2)^k.
/// Only ζ2-powers enter, so no zeta-table cap applies here.
pub fn sin_pi_over_pi(order: i64, _kmax: u32) -> Result<DeltaSeries> {
    let mut coeffs = vec![ExactScalar::zero(); (order + 1).max(0) as usize];
    let pi2 = ExactScalar::zeta(2).mul_q(&Rational::from(6));
    let mut pie = ExactScalar::one();
    let mut k = 0i64;
    loop {
        let deg = 2 * k + 1;
        if deg > order {
            break;
        }
        let mut fact = Rational::from(1);
        for j in 2..=deg {
            fact *= j;
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        coeffs[deg as usize] = pie.mul_q(&Rational::from(Rational::from(sign) / fact));
        pie = pie.mul(&pi2);
        k += 1;
    }
    Ok(GSeries::new(0, order, coeffs))
}

/// Substitute δ → −δ.
pub fn flip_sign(s: &DeltaSeries) -> DeltaSeries {
    let mut out = s.clone();
    for (i, c) in out.coeffs.iter_mut().enumerate() {
        let d = out.min_deg + i as i64;
        if d.rem_euclid(2) == 1 {
            *c = c.neg();
        }
    }
    out
}

/// Expand Γ(−m − δ(g)) where δ(g) is a small series: the Laurent data in δ
/// composed with the series. δ must have positive valuation in g.
pub fn gamma_pole_composed(
    delta: &GSeries<ExactScalar>,
    pole_index: u32,
    order: i64,
    kmax: u32,
) -> Result<GSeries<ExactScalar>> {
    if delta.min_deg < 1 {
        return Err(Error::InvalidArgument(
            "gamma pole expansion needs an offset series vanishing at g = 0".into(),
        ));
    }
    let dord = order / delta.min_deg + 2;
    let lau = gamma_at_negative_integer(pole_index, dord, kmax)?;
    // Compose: Σ c_k δ(g)^k for k = −1..dord.
    let mut acc = GSeries::zero(order);
    let dinv = delta.inverse()?;
    for (i, c) in lau.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let k = lau.min_deg + i as i64;
        let pw = if k >= 0 {
            delta.pow(k)?
        } else {
            dinv.pow(-k)?
        };
        acc = acc.add(&pw.scale(c).truncated(order));
    }
    Ok(acc.truncated(order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::ops::Pow;
    use rug::Float;

    fn eval_delta(s: &DeltaSeries, d: f64, prec: u32) -> Float {
        let dv = Float::with_val(prec, d);
        let mut acc = Float::with_val(prec, 0);
        for (i, c) in s.coeffs.iter().enumerate() {
            let k = s.min_deg + i as i64;
            let term = c.eval(prec) * Float::with_val(prec, dv.clone().pow(k as i32));
            acc += term;
        }
        acc
    }

    #[test]
    fn gamma_pole_leading_terms() {
        // Γ(−δ) = −1/δ − γ + O(δ)
        let s = gamma_at_negative_integer(0, 2, 8).unwrap();
        assert_eq!(s.coeff(-1), ExactScalar::from_int(-1));
        assert_eq!(s.coeff(0), ExactScalar::gamma().neg());
        // Γ(−1−δ) = +1/δ + … (recurrence applied once)
        let s1 = gamma_at_negative_integer(1, 1, 8).unwrap();
        assert_eq!(s1.coeff(-1), ExactScalar::from_int(1));
    }

    #[test]
    fn gamma_expansion_matches_bigfloat() {
        // Numeric check at small δ against MPFR Γ, relative 10·δ^{order+1}.
        let order = 5;
        let s = gamma_at_negative_integer(2, order, 8).unwrap();
        for &d in &[1e-3, 5e-4] {
            let approx = eval_delta(&s, d, 200);
            let arg = Float::with_val(200, -2) - Float::with_val(200, d);
            let exact = arg.gamma();
            let rel = Float::with_val(200, (approx - &exact) / exact).abs();
            let bound = 10.0 * d.powi(order as i32 + 1) / d; // relative: leading is 1/δ
            assert!(rel.to_f64() < bound, "rel err {rel} vs {bound}");
        }
    }

    #[test]
    fn gamma_one_plus_has_zeta2() {
        // Γ(1+δ) = exp(−γδ + Σ ζ(k)(−δ)^k/k) = 1 − γδ + (γ²/2 + π²/12)δ² + …
        let s = gamma_one_plus(2, 8).unwrap();
        assert_eq!(s.coeff(0), ExactScalar::one());
        assert_eq!(s.coeff(1), ExactScalar::gamma().neg());
        let half_g2 = ExactScalar::gamma()
            .mul(&ExactScalar::gamma())
            .mul_q(&Rational::from((1, 2)));
        let pi2_12 = ExactScalar::zeta(2).mul_q(&Rational::from((1, 2)));
        assert_eq!(s.coeff(2), half_g2.add(&pi2_12));
        // and Γ(−δ)·(−δ) = Γ(1−δ)/(1·…) carries the flipped-sign form
        let p = gamma_at_negative_integer(0, 2, 8)
            .unwrap()
            .mul(&GSeries::monomial(1, ExactScalar::from_int(-1), 3));
        assert_eq!(p.coeff(1), ExactScalar::gamma());
        assert_eq!(p.coeff(2), half_g2.add(&pi2_12));
    }

    #[test]
    fn inv_gamma_reflection_consistent() {
        // 1/Γ(−n−β) times Γ(−n−β) = 1 through the computed order.
        for n in 0..3u32 {
            let inv = inv_gamma_at_negative_integer(n, 4, 8).unwrap();
            let dir = gamma_at_negative_integer(n, 5, 8).unwrap();
            let prod = inv.mul(&dir);
            assert_eq!(prod.coeff(0), ExactScalar::one());
            for k in 1..=3 {
                assert!(prod.coeff(k).is_zero(), "order {k} not cancelled");
            }
        }
    }

    #[test]
    fn zeta_cap_enforced() {
        assert!(matches!(
            log_gamma_one_plus(9, 8),
            Err(Error::ZetaTableExceeded { .. })
        ));
    }
}
