use super::adaptive::adaptive_core;
use super::semi::exponential;
use super::{EvalResult, QuadConfig};
use crate::specfun::{bessel_j_normalized, ln_gamma};
use crate::Result;
use std::f64::consts::PI;

/// Radial Fourier transform on `ℝ^k`:
/// `F̂(ξ) = ∫_{ℝ^k} e^{-2πi⟨ξe, λ⟩} f(|λ|) dλ`.
///
/// Computed as `2π^{k/2} ∫_0^∞ r^{k-1} f(r) Λ_{k/2-1}(2πξr) dr` with
/// `Λ_ν(x) = J_ν(x)/(x/2)^ν`, which is smooth through `ξ = 0` where it
/// reduces to `ω_{k-1} ∫ r^{k-1} f`. For `k = 1` the kernel is `2cos(2πξr)`.
/// `f` must decay exponentially.
pub fn bochner_radial_ft<F>(f: F, k: u32, xi: f64, cfg: &QuadConfig) -> Result<EvalResult>
where
    F: Fn(f64) -> f64,
{
    try_bochner_radial_ft(|r| Ok(f(r)), k, xi, cfg)
}

/// Fallible form of [`bochner_radial_ft`] on `[0, ∞)`.
pub fn try_bochner_radial_ft<F>(mut f: F, k: u32, xi: f64, cfg: &QuadConfig) -> Result<EvalResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    let weight = RadialWeight::new(k, xi)?;
    // first panel about one oscillation long
    let width = if xi > 0.0 { (1.0 / xi).min(1.0) } else { 1.0 };
    let g = |r: f64| -> Result<f64> {
        let fr = f(r)?;
        if fr == 0.0 {
            return Ok(0.0);
        }
        Ok(fr * weight.at(r)?)
    };
    Ok(exponential(g, 0.0, width, 0.0, cfg)?.result.scaled(weight.prefactor))
}

/// As [`try_bochner_radial_ft`] but over `[0, cutoff]` only, for callers that
/// know where their integrand becomes negligible. The interval is pre-split
/// into panels of about two oscillation periods.
pub fn try_bochner_radial_ft_truncated<F>(
    mut f: F,
    k: u32,
    xi: f64,
    cutoff: f64,
    cfg: &QuadConfig,
) -> Result<EvalResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(cutoff > 0.0) || !cutoff.is_finite() {
        return Err(crate::error::domain("bochner_radial_ft", format!("cutoff must be positive, got {cutoff}")));
    }
    let weight = RadialWeight::new(k, xi)?;
    let periods = cutoff * xi;
    let max_initial = (cfg.max_subdivisions / 4).max(1);
    let n = ((periods / 2.0).ceil() as usize).clamp(1, max_initial);
    let points: Vec<f64> = (0..=n).map(|i| cutoff * i as f64 / n as f64).collect();
    let g = |r: f64| -> Result<f64> {
        let fr = f(r)?;
        if fr == 0.0 {
            return Ok(0.0);
        }
        Ok(fr * weight.at(r)?)
    };
    let mut res = adaptive_core(g, &points, cfg)?.result.scaled(weight.prefactor);
    res.cutoff = Some(cutoff);
    Ok(res)
}

struct RadialWeight {
    k: u32,
    nu: f64,
    omega: f64,
    prefactor: f64,
}

impl RadialWeight {
    fn new(k: u32, xi: f64) -> Result<Self> {
        if k == 0 {
            return Err(crate::error::domain("bochner_radial_ft", "dimension k must be >= 1"));
        }
        if !(xi >= 0.0) || !xi.is_finite() {
            return Err(crate::error::domain("bochner_radial_ft", format!("need finite xi >= 0, got {xi}")));
        }
        let half_k = 0.5 * k as f64;
        let prefactor = if k == 1 { 2.0 } else { 2.0 * PI.powf(half_k) };
        // sanity: prefactor · Λ(0) = ω_{k-1}
        debug_assert!(k == 1 || {
            let omega = (2f64.ln() + half_k * PI.ln() - ln_gamma(half_k).unwrap()).exp();
            (prefactor / crate::specfun::gamma(half_k).unwrap() - omega).abs() < 1e-12 * omega
        });
        Ok(RadialWeight {
            k,
            nu: half_k - 1.0,
            omega: 2.0 * PI * xi,
            prefactor,
        })
    }

    /// `r^{k-1} Λ_{k/2-1}(2πξr)` (or `cos(2πξr)` for `k = 1`).
    fn at(&self, r: f64) -> Result<f64> {
        let x = self.omega * r;
        if self.k == 1 {
            return Ok(x.cos());
        }
        Ok(r.powi(self.k as i32 - 1) * bessel_j_normalized(self.nu, x)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::bessel_j;

    fn cfg() -> QuadConfig {
        QuadConfig::default().with_rel_tol(1e-12)
    }

    fn gauss(r: f64) -> f64 {
        (-PI * r * r).exp()
    }

    #[test]
    fn gaussian_total_integral_plane() {
        let r = bochner_radial_ft(gauss, 2, 0.0, &cfg()).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn gaussian_in_three_dimensions() {
        let r = bochner_radial_ft(gauss, 3, 0.7, &cfg()).unwrap();
        let want = (-PI * 0.49f64).exp();
        assert!((want - 0.214514).abs() < 1e-6);
        assert!(((r.value - want) / want).abs() < 1e-11, "{} vs {want}", r.value);
    }

    #[test]
    fn gaussian_is_self_dual_in_low_dimensions() {
        let c = cfg();
        for k in 1..=4 {
            for xi in [0.0, 0.3, 0.9, 1.6] {
                let r = bochner_radial_ft(gauss, k, xi, &c).unwrap();
                let want = (-PI * xi * xi).exp();
                assert!(
                    ((r.value - want) / want).abs() <= 10.0 * c.rel_tol,
                    "k={k} xi={xi}: {} vs {want}",
                    r.value
                );
            }
        }
    }

    #[test]
    fn continuous_at_origin() {
        let c = cfg();
        let f0 = bochner_radial_ft(gauss, 3, 0.0, &c).unwrap().value;
        let mut last = f64::INFINITY;
        for xi in [1e-2, 1e-3, 1e-4] {
            let gap = (bochner_radial_ft(gauss, 3, xi, &c).unwrap().value - f0).abs();
            assert!(gap < last);
            last = gap;
        }
        assert!(last < 1e-6);
    }

    #[test]
    fn line_case_matches_half_order_bessel_form() {
        // 2∫cos(2πξr) f dr against the general J formula at ν = -1/2
        let f = |r: f64| (-r).exp() / (1.0 + r * r);
        let xi: f64 = 0.37;
        let c = cfg();
        let a = bochner_radial_ft(f, 1, xi, &c).unwrap().value;
        let b = integrate_semiinfinite_j(f, xi);
        assert!(((a - b) / b).abs() < 1e-10, "{a} vs {b}");
    }

    fn integrate_semiinfinite_j(f: impl Fn(f64) -> f64, xi: f64) -> f64 {
        // (2π/ξ^{-1/2}) ∫ r^{1/2} f(r) J_{-1/2}(2πξr) dr
        let g = |r: f64| r.sqrt() * f(r) * bessel_j(-0.5, 2.0 * PI * xi * r).unwrap();
        let v = crate::quadrature::integrate_semiinfinite(g, 0.0, crate::quadrature::Decay::Exponential, &cfg())
            .unwrap()
            .value;
        2.0 * PI * xi.sqrt() * v
    }

    #[test]
    fn truncated_form_agrees() {
        let c = cfg();
        let a = bochner_radial_ft(gauss, 2, 1.2, &c).unwrap();
        let b = try_bochner_radial_ft_truncated(|r| Ok(gauss(r)), 2, 1.2, 4.0, &c).unwrap();
        let want = (-PI * 1.44f64).exp();
        assert!(((a.value - want) / want).abs() < 1e-9, "{}", a.value);
        assert!(((b.value - want) / want).abs() < 1e-9, "{}", b.value);
        assert_eq!(b.cutoff, Some(4.0));
    }

    #[test]
    fn positive_input_peaks_at_zero() {
        let f = |r: f64| (-r).exp() * (1.0 + r);
        let c = cfg();
        for k in 1..=3 {
            let f0 = bochner_radial_ft(f, k, 0.0, &c).unwrap().value;
            for xi in [0.05, 0.2, 0.5, 1.0, 3.0] {
                let v = bochner_radial_ft(f, k, xi, &c).unwrap().value;
                assert!(v.abs() <= f0);
            }
        }
    }
}
