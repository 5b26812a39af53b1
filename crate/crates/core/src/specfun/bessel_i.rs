//! Exponentially scaled modified Bessel function `Ĩ_ν(x) = e^{-x} I_ν(x)`.
//!
//! Small arguments use the ascending power series
//! `I_ν(x) = Σ (x/2)^{ν+2k} / (k! Γ(ν+k+1))`, with the prefactor kept in
//! log form and the partial sum rescaled whenever it grows large. Large
//! arguments use the Hankel expansion
//! `Ĩ_ν(x) ~ (2πx)^{-1/2} Σ (-1)^k a_k(ν) / x^k`.

use super::gamma::ln_gamma_unchecked;
use super::SpecFunResult;
use crate::error::{domain, Result};

/// Below this argument the power series is always used.
pub const I_SERIES_SWITCH: f64 = 30.0;

const RESCALE: f64 = 1e280;
const MAX_TERMS: usize = 10_000;

/// Value split as `mantissa · exp(log_scale)`; both parts finite.
#[derive(Debug, Clone, Copy)]
struct Split {
    mantissa: f64,
    log_scale: f64,
    abs_err_rel: f64,
}

impl Split {
    fn value(self) -> f64 {
        self.mantissa * self.log_scale.exp()
    }
    fn ln(self) -> f64 {
        self.mantissa.ln() + self.log_scale
    }
}

fn check(nu: f64, x: f64) -> Result<()> {
    if !(nu > -1.0) || !nu.is_finite() {
        return Err(domain("bessel_i_scaled", format!("order ν = {nu} must exceed -1")));
    }
    if !(x >= 0.0) || !x.is_finite() {
        return Err(domain("bessel_i_scaled", format!("argument x = {x} must be finite and ≥ 0")));
    }
    Ok(())
}

fn uses_asymptotic(nu: f64, x: f64) -> bool {
    x > I_SERIES_SWITCH && x > nu * nu
}

fn series(nu: f64, x: f64) -> Split {
    let q = 0.25 * x * x;
    let mut log_scale = nu * (0.5 * x).ln() - x - ln_gamma_unchecked(nu + 1.0);
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 0usize;
    loop {
        k += 1;
        let kf = k as f64;
        term *= q / (kf * (nu + kf));
        sum += term;
        if sum > RESCALE {
            sum /= RESCALE;
            term /= RESCALE;
            log_scale += RESCALE.ln();
        }
        let past_peak = q < kf * (nu + kf);
        if (past_peak && term < f64::EPSILON * 0.5 * sum) || k >= MAX_TERMS {
            break;
        }
    }
    Split {
        mantissa: sum,
        log_scale,
        abs_err_rel: (k as f64 + 4.0) * f64::EPSILON,
    }
}

fn asymptotic(nu: f64, x: f64) -> Split {
    let mu = 4.0 * nu * nu;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut last = 1.0f64;
    for j in 1..200 {
        let jf = j as f64;
        let odd = 2.0 * jf - 1.0;
        let next = -term * (mu - odd * odd) / (8.0 * jf * x);
        if next.abs() > last {
            break;
        }
        term = next;
        last = term.abs();
        sum += term;
        if term.abs() < 0.5 * f64::EPSILON * sum.abs() {
            break;
        }
    }
    Split {
        mantissa: sum,
        log_scale: -0.5 * (2.0 * std::f64::consts::PI * x).ln(),
        abs_err_rel: last + 8.0 * f64::EPSILON,
    }
}

fn split(nu: f64, x: f64) -> Split {
    if uses_asymptotic(nu, x) {
        asymptotic(nu, x)
    } else {
        series(nu, x)
    }
}

fn at_zero(nu: f64) -> f64 {
    if nu == 0.0 {
        1.0
    } else if nu > 0.0 {
        0.0
    } else {
        f64::INFINITY
    }
}

/// `e^{-x} I_ν(x)` for ν > −1, x ≥ 0.
pub fn bessel_i_scaled(nu: f64, x: f64) -> Result<f64> {
    check(nu, x)?;
    if x == 0.0 {
        return Ok(at_zero(nu));
    }
    Ok(split(nu, x).value())
}

/// `ln(e^{-x} I_ν(x))`, finite even where the scaled value itself under- or
/// overflows (tiny `x` with large |ν|).
pub fn ln_bessel_i_scaled(nu: f64, x: f64) -> Result<f64> {
    check(nu, x)?;
    if x == 0.0 {
        return Ok(at_zero(nu).ln());
    }
    Ok(split(nu, x).ln())
}

/// Scaled value together with an error estimate and the underflow flag of the
/// unscaled `I_ν(x)`.
pub fn bessel_i_scaled_result(nu: f64, x: f64) -> Result<SpecFunResult> {
    check(nu, x)?;
    if x == 0.0 {
        let value = at_zero(nu);
        return Ok(SpecFunResult {
            value,
            abs_error_estimate: 0.0,
            underflow_flag: value == 0.0,
        });
    }
    let s = split(nu, x);
    let value = s.value();
    let ln_unscaled = s.ln() + x;
    Ok(SpecFunResult {
        value,
        abs_error_estimate: (s.abs_err_rel * value).abs(),
        underflow_flag: ln_unscaled < f64::MIN_POSITIVE.ln(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn closed_form_minus_half() {
        // I_{-1/2}(x) = sqrt(2/(πx)) cosh x
        for &x in &[0.01f64, 0.5, 2.0, 7.5, 29.0, 31.0, 120.0, 690.0] {
            let want = if x < 20.0 {
                (-x).exp() * (2.0 / (PI * x)).sqrt() * x.cosh()
            } else {
                (2.0 / (PI * x)).sqrt() * 0.5 * (1.0 + (-2.0 * x).exp())
            };
            let got = bessel_i_scaled(-0.5, x).unwrap();
            assert!(rel(got, want) < 1e-13, "x={x}: {got} vs {want}");
        }
        let got = bessel_i_scaled(-0.5, 2.0).unwrap();
        assert!(rel(got, 0.287_261_538_112_401_156_94) < 1e-14);
    }

    #[test]
    fn order_one_vanishes_at_origin() {
        assert_eq!(bessel_i_scaled(1.0, 0.0).unwrap(), 0.0);
        assert_eq!(bessel_i_scaled(0.0, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn mpmath_reference() {
        let cases = [
            (0.7, 10.0, 0.124_568_546_808_943_726_78),
            (2.3, 50.0, 0.053_618_805_079_643_873_045),
            (0.3, 700.0, 0.015_080_325_477_307_068_893),
            (0.0, 30.0, 0.073_145_946_482_237_293_929),
            (5.5, 29.0, 0.043_832_609_366_123_748_154),
            (0.5, 0.001, 0.025_206_110_707_457_800_594),
            (-0.9, 0.5, 0.364_742_068_083_987_870_26),
            (3.0, 31.0, 0.062_082_163_440_264_025_829),
            (0.0, 1e-10, 0.999_999_999_900_000_000_01),
        ];
        for (nu, x, want) in cases {
            let got = bessel_i_scaled(nu, x).unwrap();
            assert!(rel(got, want) < 1e-12, "ν={nu} x={x}: {got} vs {want}");
        }
    }

    #[test]
    fn regimes_agree_across_switch() {
        for &nu in &[-0.7, 0.0, 0.5, 1.3, 2.9, 4.0] {
            for &x in &[31.0, 45.0, 80.0] {
                if nu * nu >= x {
                    continue;
                }
                let a = series(nu, x).value();
                let b = asymptotic(nu, x).value();
                assert!(rel(a, b) < 1e-13, "ν={nu} x={x}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn underflow_flag_and_log_form() {
        let r = bessel_i_scaled_result(40.0, 1e-8).unwrap();
        assert!(r.underflow_flag);
        let ln = ln_bessel_i_scaled(40.0, 1e-8).unwrap();
        assert!(ln.is_finite() && ln < -700.0);
        let r = bessel_i_scaled_result(1.0, 3.0).unwrap();
        assert!(!r.underflow_flag);
        assert!(r.abs_error_estimate >= 0.0 && r.abs_error_estimate < 1e-13);
    }

    #[test]
    fn rejects_bad_order() {
        assert!(bessel_i_scaled(-1.0, 1.0).is_err());
        assert!(bessel_i_scaled(0.5, -1.0).is_err());
    }
}
