use std::f64::consts::PI;

use super::logfun::ln_x_over_sinh;
use crate::error::domain;
use crate::quadrature::{try_integrate_semiinfinite, Decay, EvalResult, QuadConfig};
use crate::{Error, Result};

/// Ornstein–Uhlenbeck Mehler weight on `ℝ^m`:
///
/// `(4π)^{-m/2} e^{mtω} (2ω/sinh 2tω)^{m/2} exp(-(ω/(2 sinh 2tω)) |e^{tω}y − e^{-tω}x|²)`.
///
/// `u(x,t) = ∫ weight·ψ(y) dy` solves `u_t = Δu − 2ω⟨x,∇u⟩`, `u(·,0) = ψ`.
pub fn ou_mehler_kernel(m: u32, omega: f64, x: &[f64], y: &[f64], t: f64) -> Result<f64> {
    if m == 0 || x.len() != m as usize || y.len() != m as usize {
        return Err(domain(
            "ou_mehler_kernel",
            format!("need x, y of length m = {m}, got {} and {}", x.len(), y.len()),
        ));
    }
    if !(omega > 0.0) || !omega.is_finite() || !(t > 0.0) || !t.is_finite() {
        return Err(domain("ou_mehler_kernel", format!("need omega > 0 and t > 0, got {omega}, {t}")));
    }
    let mf = m as f64;
    let tw = t * omega;
    if mf * tw > 700.0 {
        return Err(Error::Overflow {
            func: "ou_mehler_kernel",
            detail: format!("m·t·ω = {} exceeds 700", mf * tw),
        });
    }
    let u = 2.0 * tw;
    // 2ω/sinh(2tω) = (1/t)(u/sinh u)
    let ls = ln_x_over_sinh(u);
    let coeff = ls.exp() / (4.0 * t);
    let (ep, em) = (tw.exp(), (-tw).exp());
    let dist2: f64 = x.iter().zip(y).map(|(xi, yi)| (ep * yi - em * xi).powi(2)).sum();
    let ln = -0.5 * mf * (4.0 * PI).ln() + mf * tw + 0.5 * mf * (ls - t.ln()) - coeff * dist2;
    Ok(ln.exp())
}

/// `u(x,t) = ∫_ℝ W(x,y,t) ψ(y) dy` for `m = 1`.
pub fn ou_evolve_1d<F>(omega: f64, psi: F, x: f64, t: f64, cfg: &QuadConfig) -> Result<EvalResult>
where
    F: Fn(f64) -> f64,
{
    let tw = t * omega;
    if !(tw > 0.0) {
        return Err(domain("ou_evolve_1d", "need omega > 0 and t > 0"));
    }
    let centre = (-2.0 * tw).exp() * x;
    // standard deviation of the Gaussian in y
    let width = ((2.0 * tw).sinh() / (omega * (2.0 * tw).exp())).sqrt();
    try_integrate_semiinfinite(
        |v| {
            let a = centre + v;
            let b = centre - v;
            Ok(ou_mehler_kernel(1, omega, &[x], &[a], t)? * psi(a) + ou_mehler_kernel(1, omega, &[x], &[b], t)? * psi(b))
        },
        0.0,
        width,
        Decay::Exponential,
        cfg,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_drift_is_the_heat_kernel() {
        let (x, y, t) = ([1.0, 0.0], [0.0, 1.0], 0.5);
        let w = ou_mehler_kernel(2, 1e-6, &x, &y, t).unwrap();
        let heat = (4.0 * PI * t).powi(-1) * (-2.0f64 / (4.0 * t)).exp();
        assert!(((w - heat) / heat).abs() < 1e-5);
        let w = ou_mehler_kernel(2, 1e-12, &x, &y, t).unwrap();
        assert!(((w - heat) / heat).abs() < 1e-11);
    }

    #[test]
    fn origin_value() {
        for (m, omega, t) in [(1u32, 0.7, 0.4), (2, 1.3, 2.0), (3, 0.2, 5.0)] {
            let zero = vec![0.0; m as usize];
            let w = ou_mehler_kernel(m, omega, &zero, &zero, t).unwrap();
            let mf = m as f64;
            let want = (4.0 * PI).powf(-mf / 2.0) * (mf * t * omega).exp()
                * (2.0 * omega / (2.0 * t * omega).sinh()).powf(mf / 2.0);
            assert!(((w - want) / want).abs() < 1e-14);
        }
    }

    #[test]
    fn unit_mass() {
        let cfg = QuadConfig::default().with_rel_tol(1e-12);
        for (omega, x, t) in [(1.0, 0.5, 0.3), (0.3, -2.0, 1.7), (2.5, 1.0, 0.05)] {
            let m = ou_evolve_1d(omega, |_| 1.0, x, t, &cfg).unwrap();
            assert!((m.value - 1.0).abs() < 1e-11, "{}", m.value);
        }
    }

    #[test]
    fn linear_data_decay_exponentially() {
        // ψ(y) = y gives u = x e^{−2ωt}
        let cfg = QuadConfig::default().with_rel_tol(1e-12);
        let (omega, x, t) = (0.8, 1.3, 0.6);
        let u = ou_evolve_1d(omega, |y| y, x, t, &cfg).unwrap().value;
        let want = x * (-2.0 * omega * t).exp();
        assert!(((u - want) / want).abs() < 1e-11);
    }

    #[test]
    fn guards() {
        assert!(matches!(
            ou_mehler_kernel(1, 1.0, &[0.0], &[0.0], 701.0),
            Err(Error::Overflow { .. })
        ));
        assert!(ou_mehler_kernel(2, 1.0, &[0.0], &[0.0, 0.0], 1.0).is_err());
        assert!(ou_mehler_kernel(1, 0.0, &[0.0], &[0.0], 1.0).is_err());
    }
}
