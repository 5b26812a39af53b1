use super::adaptive::adaptive_core;
use super::{EvalResult, Outcome, QuadConfig};
use crate::{Error, Result};

/// Decay class of an integrand on `[a, ∞)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Decay {
    /// At least `e^{-cx}` for some `c > 0`: integrated panel by panel with a
    /// doubling cutoff.
    Exponential,
    /// `O(x^{-p})` with `p > 1`: mapped onto `[0, 1)` by `x = a + u/(1-u)`.
    Algebraic(f64),
}

/// Doubling is abandoned once the cutoff passes `a + 2^20·max(1, a)`.
const MAX_DOUBLINGS: i32 = 20;

/// `∫_a^∞ f(x) dx`.
pub fn integrate_semiinfinite<F>(f: F, a: f64, decay: Decay, cfg: &QuadConfig) -> Result<EvalResult>
where
    F: Fn(f64) -> f64,
{
    try_integrate_semiinfinite(|x| Ok(f(x)), a, 1.0, decay, cfg)
}

/// Fallible form of [`integrate_semiinfinite`] with an explicit first panel
/// width for the exponential driver (ignored for algebraic decay).
pub fn try_integrate_semiinfinite<F>(
    f: F,
    a: f64,
    first_width: f64,
    decay: Decay,
    cfg: &QuadConfig,
) -> Result<EvalResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    match decay {
        Decay::Exponential => Ok(exponential(f, a, first_width, 0.0, cfg)?.result),
        Decay::Algebraic(p) => algebraic(f, a, p, cfg),
    }
}

/// Doubling driver. `reference` is a magnitude the caller will add to this
/// integral; it loosens the tail test accordingly.
pub(crate) fn exponential<F>(
    mut f: F,
    a: f64,
    first_width: f64,
    reference: f64,
    cfg: &QuadConfig,
) -> Result<Outcome>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(a >= 0.0) || !a.is_finite() {
        return Err(crate::error::domain("integrate_semiinfinite", format!("need finite a >= 0, got {a}")));
    }
    if !(first_width > 0.0) || !first_width.is_finite() {
        return Err(crate::error::domain(
            "integrate_semiinfinite",
            format!("first panel width must be positive, got {first_width}"),
        ));
    }
    let limit = a + 2f64.powi(MAX_DOUBLINGS) * a.max(1.0) * first_width.max(1.0);
    let mut lo = a;
    let mut hi = a + first_width;
    let mut acc = EvalResult::exact(0.0);
    let mut abs_acc = 0.0;
    loop {
        // later panels only need to be accurate relative to the running total
        let scale = acc.value.abs() + reference.abs();
        let panel_cfg = cfg.with_abs_tol(cfg.abs_tol.max(0.125 * cfg.rel_tol * scale));
        let panel = adaptive_core(&mut f, &[lo, hi], &panel_cfg)?;
        acc = acc.plus(panel.result);
        abs_acc += panel.abs_value;
        let threshold = (cfg.truncation_tail_bound * (acc.value.abs() + reference.abs()))
            .max(cfg.abs_tol)
            .max(f64::EPSILON * abs_acc);
        if panel.abs_value <= threshold {
            break;
        }
        if hi >= limit {
            return Err(Error::TailNonConvergence { cutoff: hi });
        }
        lo = hi;
        hi = a + 2.0 * (hi - a);
    }
    acc.cutoff = Some(hi);
    Ok(Outcome {
        result: acc.recheck(cfg),
        abs_value: abs_acc,
    })
}

fn algebraic<F>(mut f: F, a: f64, p: f64, cfg: &QuadConfig) -> Result<EvalResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(p > 1.0) {
        return Err(crate::error::domain("integrate_semiinfinite", format!("algebraic decay needs p > 1, got {p}")));
    }
    if !(a >= 0.0) || !a.is_finite() {
        return Err(crate::error::domain("integrate_semiinfinite", format!("need finite a >= 0, got {a}")));
    }
    let g = |u: f64| -> Result<f64> {
        let v = 1.0 - u;
        Ok(f(a + u / v)? / (v * v))
    };
    Ok(adaptive_core(g, &[0.0, 1.0], cfg)?.result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn cfg() -> QuadConfig {
        QuadConfig::default().with_rel_tol(1e-12)
    }

    #[test]
    fn exponential_density() {
        let r = integrate_semiinfinite(|x| (-x).exp(), 0.0, Decay::Exponential, &cfg()).unwrap();
        assert!(r.converged);
        assert!((r.value - 1.0).abs() < 1e-13);
        assert!(r.cutoff.unwrap() > 30.0);
    }

    #[test]
    fn x_over_sinh() {
        let f = |x: f64| if x == 0.0 { 1.0 } else { x / x.sinh() };
        let r = integrate_semiinfinite(f, 0.0, Decay::Exponential, &cfg()).unwrap();
        assert!((r.value - PI * PI / 4.0).abs() < 1e-12, "{}", r.value);
        // fine midpoint grid oracle on [0, 60]
        let n = 600_000;
        let h = 60.0 / n as f64;
        let grid: f64 = (0..n).map(|i| f((i as f64 + 0.5) * h)).sum::<f64>() * h;
        assert!((r.value - grid).abs() < 1e-9);
    }

    #[test]
    fn lorentzian_algebraic() {
        let r = integrate_semiinfinite(|x| 1.0 / (1.0 + x * x), 0.0, Decay::Algebraic(2.0), &cfg()).unwrap();
        assert!(r.converged);
        assert!((r.value - PI / 2.0).abs() < 1e-12);
        assert_eq!(r.cutoff, None);
    }

    #[test]
    fn shifted_start() {
        let r = integrate_semiinfinite(|x| (-2.0 * x).exp(), 3.0, Decay::Exponential, &cfg()).unwrap();
        let exact = (-6.0f64).exp() / 2.0;
        assert!(((r.value - exact) / exact).abs() < 1e-12);
    }

    #[test]
    fn non_decaying_tail_fails() {
        let e = integrate_semiinfinite(|_| 1.0, 0.0, Decay::Exponential, &cfg());
        assert!(matches!(e, Err(Error::TailNonConvergence { .. })));
    }

    #[test]
    fn bad_decay_exponent() {
        assert!(integrate_semiinfinite(|x| 1.0 / (1.0 + x), 0.0, Decay::Algebraic(1.0), &cfg()).is_err());
    }
}
