use super::{central, clear_of_axis, StencilConfig};
use crate::error::domain;
use crate::Result;

/// Residual `u_t − Δu + 2ω⟨x, ∇u⟩` of the Ornstein–Uhlenbeck equation in
/// dimension `m = x.len() ∈ {1, 2}`. The spatial step is `h_r`.
pub fn ou_residual<F>(mut u: F, omega: f64, x: &[f64], t: f64, cfg: &StencilConfig) -> Result<f64>
where
    F: FnMut(&[f64], f64) -> Result<f64>,
{
    if !(1..=2).contains(&x.len()) {
        return Err(domain("ou_residual", format!("dimension must be 1 or 2, got {}", x.len())));
    }
    if !(omega > 0.0) {
        return Err(domain("ou_residual", "omega must be positive"));
    }
    clear_of_axis(t, cfg.h_t)?;
    let h = cfg.h_r;
    let u0 = u(x, t)?;
    let (ut, _) = central(u(x, t - cfg.h_t)?, u0, u(x, t + cfg.h_t)?, cfg.h_t);
    let mut lap = 0.0;
    let mut drift = 0.0;
    let mut y = x.to_vec();
    for i in 0..x.len() {
        y[i] = x[i] - h;
        let um = u(&y, t)?;
        y[i] = x[i] + h;
        let up = u(&y, t)?;
        y[i] = x[i];
        let (d1, d2) = central(um, u0, up, h);
        lap += d2;
        drift += x[i] * d1;
    }
    Ok(ut - lap + 2.0 * omega * drift)
}

/// The three residuals of the exponential transform `v = e^{−h} f`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiccatiResiduals {
    /// `h_t − ℬ h + (∂_r h)² − Φ`.
    pub riccati: f64,
    /// `v_t − ℬ v + Φ v` for `v = e^{−h} f`.
    pub v: f64,
    /// `f_t − ℬ f + 2 ∂_r h ∂_r f`.
    pub f: f64,
    /// `v` at the evaluation point.
    pub v_value: f64,
    /// `h` at the evaluation point.
    pub h_value: f64,
}

impl RiccatiResiduals {
    /// `res_v + v·res_riccati − e^{−h}·res_f`, which vanishes in the
    /// continuum for any smooth triple.
    pub fn identity_defect(&self) -> f64 {
        self.v + self.v_value * self.riccati - (-self.h_value).exp() * self.f
    }
}

/// Central-difference residuals of the Riccati equation for `h`, the
/// harmonic-oscillator equation for `v = e^{−h} f` and the drifted Bessel
/// equation for `f`. `ℬ = ∂_rr + ((2α−1)/r)∂_r`.
pub fn riccati_check<H, P, F>(
    h: H,
    phi: P,
    f: F,
    alpha: f64,
    at: (f64, f64),
    cfg: &StencilConfig,
) -> Result<RiccatiResiduals>
where
    H: Fn(f64, f64) -> Result<f64>,
    P: Fn(f64, f64) -> Result<f64>,
    F: Fn(f64, f64) -> Result<f64>,
{
    let (r, t) = at;
    clear_of_axis(r, cfg.h_r)?;
    clear_of_axis(t, cfg.h_t)?;
    let a = 2.0 * alpha - 1.0;
    let (hr, ht) = (cfg.h_r, cfg.h_t);
    let v = |r: f64, t: f64| -> Result<f64> { Ok((-h(r, t)?).exp() * f(r, t)?) };

    // Each function is sampled on the same five-point stencil.
    let stencil = |g: &dyn Fn(f64, f64) -> Result<f64>| -> Result<(f64, f64, f64, f64)> {
        let g0 = g(r, t)?;
        let (gr, grr) = central(g(r - hr, t)?, g0, g(r + hr, t)?, hr);
        let (gt, _) = central(g(r, t - ht)?, g0, g(r, t + ht)?, ht);
        Ok((g0, gr, grr, gt))
    };
    let (h0, h_r, h_rr, h_t) = stencil(&h)?;
    let (_, f_r, f_rr, f_t) = stencil(&f)?;
    let (v0, v_r, v_rr, v_t) = stencil(&v)?;
    let phi0 = phi(r, t)?;

    let riccati = h_t - (h_rr + a / r * h_r) + h_r * h_r - phi0;
    let res_v = v_t - (v_rr + a / r * v_r) + phi0 * v0;
    let res_f = f_t - (f_rr + a / r * f_r) + 2.0 * h_r * f_r;
    Ok(RiccatiResiduals {
        riccati,
        v: res_v,
        f: res_f,
        v_value: v0,
        h_value: h0,
    })
}
