use super::adaptive::adaptive_core;
use super::semi::exponential;
use super::{EvalResult, QuadConfig};
use crate::Result;

/// `∫_0^∞ g(t) dt` for a positive profile that decays at both ends.
///
/// `(0, t*]` is integrated in `y = ln(t*/t)` with the doubling driver and
/// `[t*, ∞)` in `u = 1/t` over `(0, 1/t*]`.
pub fn integrate_time_profile<F>(g: F, t_star: f64, cfg: &QuadConfig) -> Result<EvalResult>
where
    F: Fn(f64) -> f64,
{
    try_integrate_time_profile(|t| Ok(g(t)), t_star, cfg)
}

/// Fallible form of [`integrate_time_profile`].
pub fn try_integrate_time_profile<F>(mut g: F, t_star: f64, cfg: &QuadConfig) -> Result<EvalResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(t_star > 0.0) || !t_star.is_finite() {
        return Err(crate::error::domain("integrate_time_profile", format!("t_star must be positive, got {t_star}")));
    }
    let u_max = 1.0 / t_star;
    let upper = adaptive_core(
        |u: f64| -> Result<f64> {
            let t = 1.0 / u;
            if !t.is_finite() {
                return Ok(0.0);
            }
            let v = g(t)?;
            Ok(if v == 0.0 { 0.0 } else { v * t * t })
        },
        &[0.0, u_max],
        cfg,
    )?;
    let lower = exponential(
        |y: f64| -> Result<f64> {
            let t = t_star * (-y).exp();
            if t == 0.0 {
                return Ok(0.0);
            }
            let v = g(t)?;
            Ok(if v == 0.0 { 0.0 } else { v * t })
        },
        0.0,
        1.0,
        upper.result.value,
        cfg,
    )?;
    let mut res = upper.result.plus(lower.result);
    res.cutoff = None;
    Ok(res.recheck(cfg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gamma;

    fn cfg() -> QuadConfig {
        QuadConfig::default().with_rel_tol(1e-12)
    }

    #[test]
    fn inverse_gamma_shape() {
        let r = integrate_time_profile(|t| (-1.0 / t).exp() / (t * t), 1.0, &cfg()).unwrap();
        assert!(r.converged);
        assert!((r.value - 1.0).abs() < 1e-12, "{}", r.value);
    }

    #[test]
    fn power_times_gaussian_in_inverse_time() {
        let (kappa, a): (f64, f64) = (3.0, 2.0);
        let r = integrate_time_profile(|t| t.powf(-kappa / 2.0) * (-a / t).exp(), 1.0, &cfg()).unwrap();
        let want = a.powf(1.0 - kappa / 2.0) * gamma(kappa / 2.0 - 1.0).unwrap();
        assert!((want - 1.2533141373155).abs() < 1e-12);
        assert!(((r.value - want) / want).abs() < 1e-11, "{} vs {want}", r.value);
    }

    #[test]
    fn plain_exponential() {
        let r = integrate_time_profile(|t| (-t).exp(), 1.0, &cfg()).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12, "{}", r.value);
    }

    #[test]
    fn split_point_does_not_matter() {
        let g = |t: f64| t.powf(-2.5) * (-0.7 / t).exp();
        let a = integrate_time_profile(g, 0.1, &cfg()).unwrap().value;
        let b = integrate_time_profile(g, 10.0, &cfg()).unwrap().value;
        assert!(((a - b) / a).abs() < 1e-11);
    }

    #[test]
    fn rejects_bad_split() {
        assert!(integrate_time_profile(|t| (-t).exp(), 0.0, &cfg()).is_err());
    }
}
