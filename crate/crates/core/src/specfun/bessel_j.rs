//! Bessel function of the first kind `J_ν(x)` for real order ν ≥ −1/2.
//!
//! Three regimes:
//! * `x ≤ 2`: ascending series (no significant cancellation there);
//! * `2 < x < max(25, ν²)`: Steed's method, where the continued fraction for
//!   `J'_ν/J_ν`, downward recurrence to an order in [−1/2, 1/2], and the complex
//!   continued fraction for `p + iq` normalised through the Wronskian;
//! * otherwise: Hankel's expansion `√(2/πx) (P cos χ − Q sin χ)`.

use std::f64::consts::PI;

use super::gamma::rgamma;
use crate::error::{domain, Result};

pub const J_SERIES_SWITCH: f64 = 2.0;
pub const J_ASYMPTOTIC_SWITCH: f64 = 25.0;

const FPMIN: f64 = 1e-300;
const EPS: f64 = 1e-16;
const MAXIT: usize = 100_000;

fn check(nu: f64, x: f64) -> Result<()> {
    if !(nu >= -0.5) || !nu.is_finite() {
        return Err(domain("bessel_j", format!("order ν = {nu} must be ≥ -1/2")));
    }
    if !(x >= 0.0) || !x.is_finite() {
        return Err(domain("bessel_j", format!("argument x = {x} must be finite and ≥ 0")));
    }
    Ok(())
}

/// Σ (−1)^k (x²/4)^k / (k! Γ(ν+k+1)), i.e. `J_ν(x) / (x/2)^ν`.
fn normalized_series(nu: f64, x: f64) -> f64 {
    let q = -0.25 * x * x;
    let mut term = rgamma(nu + 1.0);
    let mut sum = term;
    for k in 1..200 {
        let kf = k as f64;
        term *= q / (kf * (nu + kf));
        sum += term;
        if term.abs() <= 0.5 * f64::EPSILON * sum.abs() {
            break;
        }
    }
    sum
}

fn hankel(nu: f64, x: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0f64;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        let next = term * (mu - odd * odd) / (8.0 * kf * x);
        if next == 0.0 {
            break;
        }
        if next.abs() > last {
            break;
        }
        term = next;
        last = term.abs();
        // t_k enters P (k even) or Q (k odd) with sign (−1)^{⌊k/2⌋}
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * term;
        } else {
            q += sign * term;
        }
        if term.abs() < 0.25 * f64::EPSILON {
            break;
        }
    }
    let phase = (0.5 * nu + 0.25) * PI;
    let (sx, cx) = x.sin_cos();
    let (sp, cp) = phase.sin_cos();
    let cos_chi = cx * cp + sx * sp;
    let sin_chi = sx * cp - cx * sp;
    (2.0 / (PI * x)).sqrt() * (p * cos_chi - q * sin_chi)
}

fn steed(nu: f64, x: f64) -> f64 {
    let nl = ((nu - x + 1.5).floor()).max(0.0) as usize;
    let mu = nu - nl as f64;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;

    // CF1 for J'_ν / J_ν (modified Lentz)
    let mut isign = 1.0;
    let mut h = nu * xi;
    if h.abs() < FPMIN {
        h = FPMIN;
    }
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    for _ in 0..MAXIT {
        b += xi2;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() < EPS {
            break;
        }
    }

    // downward recurrence ν → μ
    let mut rjl = isign * FPMIN;
    let mut rjpl = h * rjl;
    let rjl1 = rjl;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl;

    // CF2: p + iq = (J'_μ + i Y'_μ) / (J_μ + i Y_μ)
    let mut a = 0.25 - mu * mu;
    let mut p = -0.5 * xi;
    let mut q = 1.0;
    let br = 2.0 * x;
    let mut bi = 2.0;
    let mut fact = a * xi / (p * p + q * q);
    let mut cr = br + q * fact;
    let mut ci = bi + p * fact;
    let mut den = br * br + bi * bi;
    let mut dr = br / den;
    let mut di = -bi / den;
    let mut dlr = cr * dr - ci * di;
    let mut dli = cr * di + ci * dr;
    let mut temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    for i in 2..MAXIT {
        a += 2.0 * (i as f64 - 1.0);
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if dr.abs() + di.abs() < FPMIN {
            dr = FPMIN;
        }
        fact = a / (cr * cr + ci * ci);
        cr = br + cr * fact;
        ci = bi - ci * fact;
        if cr.abs() + ci.abs() < FPMIN {
            cr = FPMIN;
        }
        den = dr * dr + di * di;
        dr /= den;
        di /= -den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        if (dlr - 1.0).abs() + dli.abs() < EPS {
            break;
        }
    }
    let w = xi2 / PI;
    let gam = (p - f) / q;
    let rjmu = (w / ((p - f) * gam + q)).sqrt().copysign(rjl);
    rjl1 * (rjmu / rjl)
}

fn uses_hankel(nu: f64, x: f64) -> bool {
    x >= J_ASYMPTOTIC_SWITCH && x >= nu * nu
}

/// `J_ν(x)` for ν ≥ −1/2, x ≥ 0. `J_ν(0)` is `+∞` for negative orders.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    check(nu, x)?;
    if x == 0.0 {
        return Ok(if nu == 0.0 {
            1.0
        } else if nu > 0.0 {
            0.0
        } else {
            f64::INFINITY
        });
    }
    Ok(if x <= J_SERIES_SWITCH {
        (0.5 * x).powf(nu) * normalized_series(nu, x)
    } else if uses_hankel(nu, x) {
        hankel(nu, x)
    } else {
        steed(nu, x)
    })
}

/// `J_ν(x) / (x/2)^ν`, an entire function of `x` equal to `1/Γ(ν+1)` at the
/// origin. This is the form the radial Fourier reduction needs.
pub fn bessel_j_normalized(nu: f64, x: f64) -> Result<f64> {
    check(nu, x)?;
    if nu == -0.5 {
        return Ok(x.cos() / PI.sqrt());
    }
    if nu == 0.5 {
        let sinc = if x == 0.0 { 1.0 } else { x.sin() / x };
        return Ok(2.0 * sinc / PI.sqrt());
    }
    if x <= J_SERIES_SWITCH {
        return Ok(normalized_series(nu, x));
    }
    Ok(bessel_j(nu, x)? / (0.5 * x).powf(nu))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j0_at_origin() {
        assert_eq!(bessel_j(0.0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(1.5, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn minus_half_at_pi() {
        let want = -2.0 / (PI * 2f64.sqrt());
        let got = bessel_j(-0.5, PI).unwrap();
        assert!((got - want).abs() < 1e-15);
        assert!((got - -0.450_158_158_078_553_043_55).abs() < 1e-15);
    }

    #[test]
    fn mpmath_reference() {
        let cases = [
            (1.5, 7.3, -0.120_953_010_973_630_610_29),
            (0.3, 15.0, 0.080_045_072_038_934_181_249),
            (2.5, 40.0, -0.087_514_311_409_323_545_53),
            (1.0, 1000.0, 0.004_728_311_907_089_523_917_6),
            (0.7, 3.1, 0.142_753_075_568_079_113_33),
            (1.9, 8.5, 0.058_997_067_809_993_391_162),
            (0.0, 25.5, 0.144_062_157_546_847_861_73),
            (-0.4, 0.01, 5.590_403_244_574_995_487_7),
            (2.0, 100.3, -0.043_205_510_604_610_304_664),
            (0.5, 12.0, -0.123_588_535_955_941_943_75),
        ];
        for (nu, x, want) in cases {
            let got = bessel_j(nu, x).unwrap();
            assert!(((got - want) / want).abs() < 1e-12, "J_{nu}({x}) = {got}, want {want}");
        }
    }

    #[test]
    fn near_zero_absolute() {
        let j0_zero = 2.404_825_557_695_773;
        let got = bessel_j(0.0, j0_zero).unwrap();
        assert!(got.abs() < 1e-14, "{got}");
    }

    #[test]
    fn three_halves_closed_form() {
        // J_{3/2}(x) = √(2/(πx)) (sin x / x − cos x)
        for &x in &[0.3, 1.9, 2.1, 7.3, 19.0, 26.0, 60.0] {
            let want = (2.0 / (PI * x)).sqrt() * (x.sin() / x - x.cos());
            let got = bessel_j(1.5, x).unwrap();
            assert!((got - want).abs() < 1e-13 * (1.0 + want.abs()), "x={x}");
        }
    }

    #[test]
    fn steed_matches_hankel_in_overlap() {
        for &nu in &[-0.5, -0.2, 0.0, 0.5, 1.0, 2.3] {
            for &x in &[26.0, 33.0, 47.5] {
                let a = steed(nu, x);
                let b = hankel(nu, x);
                assert!((a - b).abs() < 1e-14, "ν={nu} x={x}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn normalized_form() {
        assert!((bessel_j_normalized(0.0, 0.0).unwrap() - 1.0).abs() < 1e-16);
        assert!((bessel_j_normalized(1.0, 0.0).unwrap() - 1.0).abs() < 1e-16);
        for &(nu, x) in &[(0.0, 3.3), (1.0, 0.7), (1.0, 40.0), (-0.5, 5.0), (0.5, 5.0), (0.5, 1e-9)] {
            let direct = if x > 0.0 { bessel_j(nu, x).unwrap() / (0.5 * x).powf(nu) } else { 0.0 };
            let got = bessel_j_normalized(nu, x).unwrap();
            assert!((got - direct).abs() < 1e-14 * (1.0 + direct.abs()), "ν={nu} x={x}");
        }
    }

    #[test]
    fn rejects_low_order() {
        assert!(bessel_j(-0.6, 1.0).is_err());
    }
}
