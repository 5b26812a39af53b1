//! Integral of `exp(z⟨ξ, y⟩)` over the unit sphere `S^{m−1}`.

use super::bessel_i::ln_bessel_i_scaled;
use crate::error::{domain, Result};

/// `∫_{S^{m−1}} e^{z⟨ξ,y⟩} dσ(y) = (2π)^{m/2} z^{1−m/2} I_{m/2−1}(z)`.
pub fn sphere_exp_integral(m: u32, z: f64) -> Result<f64> {
    Ok(ln_sphere_exp_integral(m, z)?.exp())
}

/// Logarithm of [`sphere_exp_integral`]; stays finite where the value overflows.
pub fn ln_sphere_exp_integral(m: u32, z: f64) -> Result<f64> {
    if m < 2 {
        return Err(domain("sphere_exp_integral", format!("dimension m = {m} must be ≥ 2")));
    }
    if !(z > 0.0) || !z.is_finite() {
        return Err(domain("sphere_exp_integral", format!("z = {z} must be positive")));
    }
    let half = 0.5 * m as f64;
    let nu = half - 1.0;
    Ok(half * (2.0 * std::f64::consts::PI).ln() + (1.0 - half) * z.ln() + ln_bessel_i_scaled(nu, z)? + z)
}
