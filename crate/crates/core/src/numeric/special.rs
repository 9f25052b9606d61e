//! Special-function evaluations beyond the MPFR built-ins, plus thin
//! wrappers so call sites stay uniform.

use rug::Float;

use super::cplx::Cplx;

pub fn gamma(x: &Float) -> Float {
    x.clone().gamma()
}

pub fn ln_gamma(x: &Float) -> Float {
    x.clone().ln_gamma()
}

pub fn digamma(x: &Float) -> Float {
    x.clone().digamma()
}

/// Exponential integral Ei(x) (MPFR eint).
pub fn ei(x: &Float) -> Float {
    x.clone().eint()
}

/// Γ(z) for complex z via Lanczos-free Stirling with argument shifting.
///
/// Shift z up until Re(z+n) is large enough for the Stirling tail at the
/// working precision, evaluate the asymptotic series, then divide the
/// recurrence factors back out.
pub fn gamma_cplx(z: &Cplx) -> Cplx {
    let prec = z.prec();
    let wp = prec + 32;
    let zz = Cplx::new(
        Float::with_val(wp, &z.re),
        Float::with_val(wp, &z.im),
    );
    // Number of Stirling terms and the shift; n ≈ 0.35·bits keeps the tail
    // below 2^−wp when Re z ≳ n.
    let nterms = ((wp as f64) * 0.25).ceil() as usize + 4;
    let shift_target = (wp as f64) * 0.35 + 8.0;
    let mut shift = 0u32;
    let mut w = zz.clone();
    while w.re.to_f64() < shift_target {
        shift += 1;
        w = w.add(&Cplx::one(wp));
    }
    // Stirling: lnΓ(w) = (w−1/2)ln w − w + ln(2π)/2 + Σ B_{2n}/(2n(2n−1) w^{2n−1})
    let ln2pi_half = {
        let two_pi = Float::with_val(wp, rug::float::Constant::Pi) * 2u32;
        Cplx::real(two_pi.ln() / 2u32)
    };
    let half = Cplx::real(Float::with_val(wp, 0.5));
    let mut acc = w
        .sub(&half)
        .mul(&w.ln())
        .sub(&w)
        .add(&ln2pi_half);
    // Bernoulli numbers by the recurrence Σ_{j} C(n+1,j) B_j = 0.
    let bern = bernoulli(2 * nterms);
    let winv = w.inv();
    let winv2 = winv.mul(&winv);
    let mut wpow = winv.clone();
    for n in 1..=nterms {
        let b = &bern[2 * n];
        let denom = rug::Rational::from((2 * n as i64) * (2 * n as i64 - 1));
        let c = rug::Rational::from(b / denom);
        let term = wpow.scale(&Float::with_val(wp, &c));
        acc = acc.add(&term);
        wpow = wpow.mul(&winv2);
    }
    let mut g = acc.exp();
    // divide back: Γ(z) = Γ(z+k)/(z(z+1)…(z+k−1))
    let mut fac = Cplx::one(wp);
    let mut cur = zz;
    for _ in 0..shift {
        fac = fac.mul(&cur);
        cur = cur.add(&Cplx::one(wp));
    }
    g = g.div(&fac);
    Cplx::new(Float::with_val(prec, g.re), Float::with_val(prec, g.im))
}

/// Bernoulli numbers B_0..B_n as exact rationals (B_1 = −1/2 convention).
pub fn bernoulli(n: usize) -> Vec<rug::Rational> {
    let mut b: Vec<rug::Rational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        // B_m = −(1/(m+1)) Σ_{j<m} C(m+1, j) B_j
        if m == 0 {
            b.push(rug::Rational::from(1));
            continue;
        }
        let mut acc = rug::Rational::new();
        let mut binom = rug::Integer::from(1); // C(m+1, 0)
        for (j, bj) in b.iter().enumerate().take(m) {
            acc += rug::Rational::from(bj * &binom);
            // C(m+1, j+1) = C(m+1, j)·(m+1−j)/(j+1), exact at every step
            binom *= m as i64 + 1 - j as i64;
            binom /= j as i64 + 1;
        }
        acc /= -(m as i64 + 1);
        b.push(acc);
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_values() {
        let b = bernoulli(8);
        assert_eq!(b[0], 1);
        assert_eq!(b[1], rug::Rational::from((-1, 2)));
        assert_eq!(b[2], rug::Rational::from((1, 6)));
        assert_eq!(b[3], 0);
        assert_eq!(b[4], rug::Rational::from((-1, 30)));
        assert_eq!(b[8], rug::Rational::from((-1, 30)));
    }

    #[test]
    fn ei_at_ten() {
        // Ei(10) = 2492.2289762418777591384401439985248489896472…
        let v = ei(&Float::with_val(200, 10));
        let expect = Float::with_val(200, 2492.228976241877759);
        let rel = (Float::with_val(200, &v - &expect) / &expect).abs();
        assert!(rel < 1e-15);
    }

    #[test]
    fn complex_gamma_reduces_to_real() {
        let z = Cplx::from_f64(3.5, 0.0, 150);
        let g = gamma_cplx(&z);
        let real = gamma(&Float::with_val(150, 3.5));
        let diff = Float::with_val(150, &g.re - &real).abs();
        assert!(diff < Float::with_val(150, 1e-38), "diff {:e}", diff.to_f64());
        assert!(g.im.clone().abs() < Float::with_val(150, 1e-38));
    }

    #[test]
    fn complex_gamma_reflection() {
        // Γ(z)Γ(1−z) = π/sin(πz) at z = 0.3 + 0.7i
        let prec = 150;
        let z = Cplx::from_f64(0.3, 0.7, prec);
        let one_minus = Cplx::one(prec).sub(&z);
        let lhs = gamma_cplx(&z).mul(&gamma_cplx(&one_minus));
        let pi = Float::with_val(prec, rug::float::Constant::Pi);
        let piz = z.scale(&pi);
        // sin(w) = (e^{iw} − e^{−iw}) / 2i
        let i = Cplx::i(prec);
        let s = i
            .mul(&piz)
            .exp()
            .sub(&i.mul(&piz).neg().exp())
            .div(&i.scale(&Float::with_val(prec, 2)));
        let rhs = Cplx::real(pi).div(&s);
        let diff = lhs.sub(&rhs).abs();
        assert!(diff < Float::with_val(prec, 1e-35), "diff {:e}", diff.to_f64());
    }
}
