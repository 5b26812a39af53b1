use std::f64::consts::PI;

use super::logfun::{ln_x_over_sinh, x_coth_minus_one};
use super::{radial_cutoff, KernelParams, RadialPoint};
use crate::quadrature::{try_bochner_radial_ft_truncated, EvalResult, QuadConfig};
use crate::specfun::ln_gamma;
use crate::Result;

/// Korányi–Folland gauge `(r⁴ + 16 s²)^{1/4}`.
pub fn gauge(r: f64, s: f64) -> f64 {
    // scale first so r⁴ cannot overflow
    let m = r.abs().max((4.0 * s.abs()).sqrt());
    if m == 0.0 {
        return 0.0;
    }
    let (a, b) = (r / m, s / (m * m));
    m * (a.powi(4) + 16.0 * b * b).powf(0.25)
}

/// `G*_{α,β}((r,σ),t) = (2^k/(4πt)^β) F̂(s/(2πt))` where `F̂` is the radial
/// Fourier transform on `ℝ^k` of `λ ↦ (λ/sinh λ)^α e^{-(r²/4t) λ coth λ}`.
///
/// The factor `e^{-r²/4t}` is taken out of the integrand and applied in log
/// space.
pub fn mehler_g(params: &KernelParams, pt: &RadialPoint, cfg: &QuadConfig) -> Result<EvalResult> {
    params.validate()?;
    pt.validate()?;
    let KernelParams { alpha, beta, k } = *params;
    let RadialPoint { r, s, t } = *pt;
    let c = r * r / (4.0 * t);

    let ell = |lam: f64| alpha * ln_x_over_sinh(lam) - c * x_coth_minus_one(lam);
    let cutoff = radial_cutoff(|l| Ok(ell(l)), k)?;
    let xi = s / (2.0 * PI * t);
    let ft = try_bochner_radial_ft_truncated(|l| Ok(ell(l).exp()), k, xi, cutoff, cfg)?;

    let ln_pref = k as f64 * std::f64::consts::LN_2 - beta * (4.0 * PI * t).ln() - c;
    Ok(ft.scaled(ln_pref.exp()))
}

/// The Gaveau–Hulanicki heat kernel of a group of Heisenberg type with
/// horizontal dimension `m` and vertical dimension `k`: [`mehler_g`] with
/// `α = m/2`, `β = m/2 + k`.
pub fn gh_kernel(m: u32, k: u32, pt: &RadialPoint, cfg: &QuadConfig) -> Result<EvalResult> {
    if m < 2 {
        return Err(crate::error::domain("gh_kernel", format!("m must be >= 2, got {m}")));
    }
    let half_m = 0.5 * m as f64;
    mehler_g(&KernelParams::new(half_m, half_m + k as f64, k)?, pt, cfg)
}

/// `2π^α / Γ(α)`.
pub fn pole_prefactor(alpha: f64) -> Result<f64> {
    if !(alpha > 0.0) {
        return Err(crate::error::domain("pole_prefactor", format!("alpha must be > 0, got {alpha}")));
    }
    Ok((std::f64::consts::LN_2 + alpha * PI.ln() - ln_gamma(alpha)?).exp())
}

/// `𝒦_{α,k}((r,σ),(0,0),t) = (2π^α/Γ(α)) G*_{α,α+k}((r,σ),t)`.
pub fn kernel_k_at_pole(alpha: f64, k: u32, pt: &RadialPoint, cfg: &QuadConfig) -> Result<EvalResult> {
    let g = mehler_g(&KernelParams::critical(alpha, k)?, pt, cfg)?;
    Ok(g.scaled(pole_prefactor(alpha)?))
}
