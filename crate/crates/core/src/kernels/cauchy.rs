use super::kernel_k::{mehler_kernel_k, MAX_GAUSSIAN_EXPONENT};
use crate::error::domain;
use crate::quadrature::{try_integrate_breakpoints, try_integrate_semiinfinite, Decay, EvalResult, QuadConfig};
use crate::{Error, Result};

/// Solution of the reflected Cauchy problem for `k = 1`:
///
/// `u((r,σ),t) = ∫_0^∞ ∫_ℝ 𝒦_{α,1}((r,σ),(ρ,σ'),t) φ(ρ,σ') dσ' ρ^{2α−1} dρ`
///
/// by nested adaptive quadrature. The `ρ` range is cut where the kernel is
/// below `e^{−100}` of its peak, or at the edge of the supported Gaussian
/// range, whichever comes first.
pub fn cauchy_solve_k1<F>(alpha: f64, phi: F, r: f64, sigma: f64, t: f64, cfg: &QuadConfig) -> Result<EvalResult>
where
    F: Fn(f64, f64) -> f64,
{
    try_cauchy_solve_k1(alpha, |rho, sp| Ok(phi(rho, sp)), r, sigma, t, cfg)
}

/// Fallible-datum form of [`cauchy_solve_k1`].
pub fn try_cauchy_solve_k1<F>(alpha: f64, phi: F, r: f64, sigma: f64, t: f64, cfg: &QuadConfig) -> Result<EvalResult>
where
    F: Fn(f64, f64) -> Result<f64>,
{
    if !(alpha > 0.0) || !(r > 0.0) || !(t > 0.0) || !sigma.is_finite() {
        return Err(domain("cauchy_solve_k1", "need alpha > 0, r > 0, t > 0 and finite sigma"));
    }
    let guard_sq = 4.0 * t * MAX_GAUSSIAN_EXPONENT - r * r;
    if guard_sq <= 0.0 {
        return Err(Error::Overflow {
            func: "cauchy_solve_k1",
            detail: format!("r²/(4t) = {} exceeds {MAX_GAUSSIAN_EXPONENT}", r * r / (4.0 * t)),
        });
    }
    let rho_max = (guard_sq.sqrt() * (1.0 - 1e-12)).min(r + 20.0 * t.sqrt());
    let mut points = vec![0.0];
    if r < rho_max {
        points.push(r);
    }
    points.push(rho_max);

    let weight_exp = 2.0 * alpha - 1.0;
    let vertical = |rho: f64| -> Result<f64> {
        let width = t.sqrt() * r.max(rho) + t;
        let res = try_integrate_semiinfinite(
            |u| {
                let kv = mehler_kernel_k(alpha, 1, r, rho, u, t, cfg)?.denoised();
                if kv == 0.0 {
                    return Ok(0.0);
                }
                Ok(kv * (phi(rho, sigma + u)? + phi(rho, sigma - u)?))
            },
            0.0,
            width,
            Decay::Exponential,
            cfg,
        )?;
        Ok(rho.powf(weight_exp) * res.value)
    };
    try_integrate_breakpoints(vertical, &points, cfg)
}
