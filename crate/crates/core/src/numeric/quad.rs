//! Double-exponential (tanh-sinh / exp-sinh) quadrature at arbitrary
//! precision.
//!
//! tanh-sinh handles endpoint singularities of integrable type, which is why
//! it is the default for the instanton-constant integrals; exp-sinh covers
//! half-lines with exponential decay.

use rug::Float;

use crate::error::{Error, Result};

/// ∫_a^b f(x) dx by tanh-sinh quadrature. `eps` is the absolute target.
///
/// The integrand may be mildly singular at the endpoints (integrable power
/// law); non-finite evaluations at extreme abscissas are treated as zero,
/// which is sound because the weights there are double-exponentially small.
pub fn tanh_sinh<F>(f: F, a: &Float, b: &Float, prec: u32, eps: &Float) -> Result<Float>
where
    F: Fn(&Float) -> Float,
{
    let wp = prec + 16;
    let half = Float::with_val(wp, 0.5);
    let width = Float::with_val(wp, b - a) * &half;
    let pi_half = Float::with_val(wp, rug::float::Constant::Pi) * &half;

    // t_max so that the transformed weight underflows the target.
    let t_max = 2.0 + (prec as f64 * 0.693 / 3.0).ln().max(0.0) + 2.5;

    let eval_at = |t: &Float| -> Float {
        // x = c + w·tanh((π/2)sinh t), dx = w·(π/2)cosh t / cosh²((π/2)sinh t).
        // Near the endpoints 1 ± tanh(u) cancels badly, so the abscissa is
        // built as an exact offset from the nearer endpoint:
        // 1 + tanh(u) = 2/(1+e^{−2u}),  1 − tanh(u) = 2/(1+e^{2u}).
        let s = Float::with_val(wp, t.clone().sinh());
        let u = Float::with_val(wp, &pi_half * &s);
        let ch = Float::with_val(wp, t.clone().cosh());
        let sech2 = {
            let c = u.clone().cosh();
            Float::with_val(wp, 1) / Float::with_val(wp, c.square())
        };
        let two_u = Float::with_val(wp, &u * 2u32);
        let xx = if u.is_sign_negative() {
            let denom = Float::with_val(wp, 1) + Float::with_val(wp, (-two_u).exp());
            let off = Float::with_val(wp, &width * 2u32) / denom;
            Float::with_val(wp, a + &off)
        } else {
            let denom = Float::with_val(wp, 1) + Float::with_val(wp, two_u.exp());
            let off = Float::with_val(wp, &width * 2u32) / denom;
            Float::with_val(wp, b - &off)
        };
        let wgt = Float::with_val(wp, &pi_half * &ch) * &sech2 * &width;
        if !wgt.is_finite() {
            return Float::new(wp);
        }
        let fv = f(&xx);
        if !fv.is_finite() {
            return Float::new(wp);
        }
        fv * wgt
    };

    let mut h = Float::with_val(wp, 1.0);
    // level 0: all integer abscissas at step 1
    let mut total = eval_at(&Float::new(wp));
    let mut k = 1u64;
    while (k as f64) <= t_max {
        let t = Float::with_val(wp, k);
        total += eval_at(&t) + eval_at(&Float::with_val(wp, -t));
        k += 1;
    }
    let mut level = 0u32;
    let max_level = 14u32;
    loop {
        // At each refinement sum the new (odd-multiple) abscissas of step h/2.
        let hh = Float::with_val(wp, &h / 2u32);
        let mut k = 1u64;
        let mut newsum = Float::new(wp);
        loop {
            let t = Float::with_val(wp, &hh * Float::with_val(wp, 2 * k - 1));
            if t.to_f64() > t_max {
                break;
            }
            let tp = eval_at(&t);
            let tm = eval_at(&Float::with_val(wp, -t));
            newsum += tp + tm;
            k += 1;
        }
        let prev = Float::with_val(wp, &total * &h);
        total += newsum;
        h = hh;
        level += 1;
        let cur = Float::with_val(wp, &total * &h);
        let diff = Float::with_val(wp, &cur - &prev).abs();
        if level >= 3 && diff < *eps {
            return Ok(Float::with_val(prec, cur));
        }
        if level >= max_level {
            return Err(Error::QuadratureFailure(format!(
                "tanh-sinh did not reach eps; last level change {:e}",
                diff.to_f64()
            )));
        }
    }
}

/// ∫_0^∞ f(x) dx for integrands with exponential decay at infinity and at
/// most an integrable singularity at 0, via the exp-sinh transform.
pub fn exp_sinh<F>(f: F, prec: u32, eps: &Float) -> Result<Float>
where
    F: Fn(&Float) -> Float,
{
    let wp = prec + 16;
    let pi_half = Float::with_val(wp, rug::float::Constant::Pi) / 2u32;
    let t_max = 2.0 + (prec as f64).sqrt() / 1.2 + 3.5;

    let eval_at = |t: &Float| -> Float {
        // x = exp((π/2)sinh t), dx = (π/2)cosh t · x dt
        let s = Float::with_val(wp, t.clone().sinh());
        let x = Float::with_val(wp, &pi_half * &s).exp();
        if !x.is_finite() || x == 0 {
            return Float::new(wp);
        }
        let ch = Float::with_val(wp, t.clone().cosh());
        let wgt = Float::with_val(wp, &pi_half * &ch) * &x;
        let fv = f(&x);
        if !fv.is_finite() {
            return Float::new(wp);
        }
        fv * wgt
    };

    let mut h = Float::with_val(wp, 1.0);
    let mut total = eval_at(&Float::new(wp));
    let mut k = 1u64;
    while (k as f64) <= t_max {
        let t = Float::with_val(wp, k);
        total += eval_at(&t) + eval_at(&Float::with_val(wp, -t));
        k += 1;
    }
    let mut level = 0u32;
    let max_level = 14u32;
    loop {
        let hh = Float::with_val(wp, &h / 2u32);
        let mut k = 1u64;
        let mut newsum = Float::new(wp);
        loop {
            let t = Float::with_val(wp, &hh * Float::with_val(wp, 2 * k - 1));
            if t.to_f64() > t_max {
                break;
            }
            newsum += eval_at(&t) + eval_at(&Float::with_val(wp, -t));
            k += 1;
        }
        let prev = Float::with_val(wp, &total * &h);
        total += newsum;
        h = hh;
        level += 1;
        let cur = Float::with_val(wp, &total * &h);
        let diff = Float::with_val(wp, &cur - &prev).abs();
        if level >= 3 && diff < *eps {
            return Ok(Float::with_val(prec, cur));
        }
        if level >= max_level {
            return Err(Error::QuadratureFailure(format!(
                "exp-sinh did not reach eps; last level change {:e}",
                diff.to_f64()
            )));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_integral() {
        let prec = 200;
        let eps = Float::with_val(prec, 1e-45);
        let a = Float::with_val(prec, -12);
        let b = Float::with_val(prec, 12);
        let v = tanh_sinh(
            |x| Float::with_val(prec + 16, -x.clone().square()).exp(),
            &a,
            &b,
            prec,
            &eps,
        )
        .unwrap();
        let sqrt_pi = Float::with_val(prec, rug::float::Constant::Pi).sqrt();
        let diff = Float::with_val(prec, &v - &sqrt_pi).abs();
        assert!(diff < Float::with_val(prec, 1e-40), "diff = {:e}", diff.to_f64());
    }

    #[test]
    fn endpoint_singularity() {
        // ∫_0^1 1/√x dx = 2, integrable endpoint singularity
        let prec = 150;
        let eps = Float::with_val(prec, 1e-35);
        let a = Float::with_val(prec, 0);
        let b = Float::with_val(prec, 1);
        let v = tanh_sinh(|x| x.clone().sqrt().recip(), &a, &b, prec, &eps).unwrap();
        let diff = Float::with_val(prec, &v - 2u32).abs();
        assert!(diff < Float::with_val(prec, 1e-30));
    }

    #[test]
    fn half_line_exponential() {
        // ∫_0^∞ e^{−x} x² dx = 2
        let prec = 150;
        let eps = Float::with_val(prec, 1e-35);
        let v = exp_sinh(
            |x| {
                let e = Float::with_val(prec + 16, -x.clone()).exp();
                e * x.clone().square()
            },
            prec,
            &eps,
        )
        .unwrap();
        let diff = Float::with_val(prec, &v - 2u32).abs();
        assert!(diff < Float::with_val(prec, 1e-30), "diff={:e}", diff.to_f64());
    }
}
