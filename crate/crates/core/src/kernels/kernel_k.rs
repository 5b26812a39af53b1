use std::f64::consts::PI;

use super::logfun::{ln_x_over_sinh, x_coth_minus_one};
use super::radial_cutoff;
use crate::error::domain;
use crate::quadrature::{try_bochner_radial_ft_truncated, EvalResult, QuadConfig};
use crate::specfun::{bessel_i_scaled, ln_bessel_i_scaled};
use crate::{Error, Result};

/// Largest supported Gaussian exponent `(r² + ρ²)/(4t)`.
pub const MAX_GAUSSIAN_EXPONENT: f64 = 700.0;

/// `ln I_ν(w)`.
fn ln_bessel_i(nu: f64, w: f64) -> Result<f64> {
    Ok(w + ln_bessel_i_scaled(nu, w)?)
}

fn check_common(func: &'static str, alpha: f64, r: f64, rho: f64, t: f64) -> Result<()> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(domain(func, format!("alpha must be > 0, got {alpha}")));
    }
    if !(r > 0.0 && rho > 0.0) || !r.is_finite() || !rho.is_finite() {
        return Err(domain(func, format!("radii must be positive, got r={r}, rho={rho}")));
    }
    if !(t > 0.0) || !t.is_finite() {
        return Err(domain(func, format!("time must be positive, got {t}")));
    }
    let c2 = (r * r + rho * rho) / (4.0 * t);
    if c2 > MAX_GAUSSIAN_EXPONENT {
        return Err(Error::Overflow {
            func,
            detail: format!("(r²+ρ²)/(4t) = {c2} exceeds {MAX_GAUSSIAN_EXPONENT}"),
        });
    }
    Ok(())
}

/// The reflected Baouendi–Grushin heat kernel
///
/// `𝒦_{α,k} = (rρ)^{1-α}/(π^k (2t)^{k+1}) · F̂(s/(2πt))`,
///
/// `F̂` being the radial Fourier transform on `ℝ^k` of
/// `λ ↦ (λ/sinh λ) e^{-λ coth λ (r²+ρ²)/4t} I_{α-1}(λρr/(2t sinh λ))`, and
/// `s = |σ' − σ|`. The `λ = 0` value of the integrand is pulled out and
/// combined with the prefactor in log space.
pub fn mehler_kernel_k(
    alpha: f64,
    k: u32,
    r: f64,
    rho: f64,
    s: f64,
    t: f64,
    cfg: &QuadConfig,
) -> Result<EvalResult> {
    check_common("mehler_kernel_k", alpha, r, rho, t)?;
    if k == 0 {
        return Err(domain("mehler_kernel_k", "k must be >= 1"));
    }
    if !(s >= 0.0) || !s.is_finite() {
        return Err(domain("mehler_kernel_k", format!("s must be finite and >= 0, got {s}")));
    }
    let nu = alpha - 1.0;
    let c2 = (r * r + rho * rho) / (4.0 * t);
    let w0 = r * rho / (2.0 * t);
    let ln_i0 = ln_bessel_i(nu, w0)?;

    let ell = |lam: f64| -> Result<f64> {
        let ls = ln_x_over_sinh(lam);
        Ok(ls - c2 * x_coth_minus_one(lam) + ln_bessel_i(nu, w0 * ls.exp())? - ln_i0)
    };
    let cutoff = radial_cutoff(ell, k)?;
    let xi = s / (2.0 * PI * t);
    let ft = try_bochner_radial_ft_truncated(|l| Ok(ell(l)?.exp()), k, xi, cutoff, cfg)?;

    let kf = k as f64;
    let ln_pref = (1.0 - alpha) * (r * rho).ln() - kf * PI.ln() - (kf + 1.0) * (2.0 * t).ln() - c2 + ln_i0;
    Ok(ft.scaled(ln_pref.exp()))
}

/// Transition density of the reflected Bessel process of dimension `2α`
/// with respect to `ρ^{2α-1} dρ`:
/// `(1/2t)(rρ)^{1-α} e^{-(r²+ρ²)/4t} I_{α-1}(rρ/2t)`.
///
/// Equals `∫_{ℝ^k} 𝒦_{α,k} dσ'` for every `k`.
pub fn bessel_heat_kernel(alpha: f64, r: f64, rho: f64, t: f64) -> Result<f64> {
    check_common("bessel_heat_kernel", alpha, r, rho, t)?;
    let ln = -(2.0 * t).ln() + (1.0 - alpha) * (r * rho).ln() - (r * r + rho * rho) / (4.0 * t)
        + ln_bessel_i(alpha - 1.0, r * rho / (2.0 * t))?;
    Ok(ln.exp())
}

/// Fixed-frequency radial propagator at `|λ| = lam`:
///
/// `e^{-a coth(a) (r²+ρ²)/(4t)} r^{1-α} ρ^α (1/2t)(a/sinh a) I_{α-1}((ρr/2t)(a/sinh a))`
///
/// with `a = 2πtλ`. The `ρ^α` factor belongs to the `dρ` integral; divide by
/// `ρ^{2α-1}` for the weight against `ρ^{2α-1} dρ`.
pub fn hat_propagator(alpha: f64, lam: f64, r: f64, rho: f64, t: f64) -> Result<f64> {
    check_common("hat_propagator", alpha, r, rho, t)?;
    if !(lam > 0.0) || !lam.is_finite() {
        return Err(domain("hat_propagator", format!("lam must be positive, got {lam}")));
    }
    let a = 2.0 * PI * t * lam;
    let ls = ln_x_over_sinh(a);
    let c2 = (r * r + rho * rho) / (4.0 * t);
    let ln = -c2 * (1.0 + x_coth_minus_one(a)) + (1.0 - alpha) * r.ln() + alpha * rho.ln() - (2.0 * t).ln()
        + ls
        + ln_bessel_i(alpha - 1.0, r * rho / (2.0 * t) * ls.exp())?;
    Ok(ln.exp())
}

/// Modulus of the `λ`-integrand of [`mehler_kernel_k`], prefactor included.
pub fn kernel_k_integrand(alpha: f64, k: u32, r: f64, rho: f64, t: f64, lam: f64) -> Result<f64> {
    check_common("kernel_k_integrand", alpha, r, rho, t)?;
    let lam = lam.abs();
    let kf = k as f64;
    let ls = ln_x_over_sinh(lam);
    let c2 = (r * r + rho * rho) / (4.0 * t);
    let ln = (1.0 - alpha) * (r * rho).ln() - kf * PI.ln() - (kf + 1.0) * (2.0 * t).ln() + ls
        - c2 * (1.0 + x_coth_minus_one(lam))
        + ln_bessel_i(alpha - 1.0, r * rho / (2.0 * t) * ls.exp())?;
    Ok(ln.exp())
}

/// Integrable majorant of [`kernel_k_integrand`] valid whenever
/// `ρr/(2t) ≤ 1`: `I_{α-1}(1)/(π^k (2t)^{k+α}) e^{-r²/4t} (λ/sinh λ)^α`.
pub fn dominating_bound(alpha: f64, k: u32, r: f64, t: f64, lam: f64) -> Result<f64> {
    if !(alpha > 0.0) || !(t > 0.0) || !(r >= 0.0) {
        return Err(domain("dominating_bound", "need alpha > 0, r >= 0, t > 0"));
    }
    let c_alpha = bessel_i_scaled(alpha - 1.0, 1.0)? * std::f64::consts::E;
    let kf = k as f64;
    let ln = -kf * PI.ln() - (kf + alpha) * (2.0 * t).ln() - r * r / (4.0 * t) + alpha * ln_x_over_sinh(lam);
    Ok(c_alpha * ln.exp())
}
