use std::f64::consts::PI;

use super::logfun::{ln_x_over_sinh, x_coth_minus_one};
use super::{energy_constant, gauge, mehler_g, EnergyConstant, Geometry, PFlowParams, RadialPoint};
use crate::error::domain;
use crate::quadrature::{try_integrate_semiinfinite, try_integrate_time_profile, Decay, EvalResult, QuadConfig};
use crate::specfun::ln_gamma;
use crate::Result;

/// `g_p(x,t) = t^{−(n+p−2)/(2(p−1))} exp(−|x|²/(4(p−1)t))`.
pub fn gp_euclid(params: &PFlowParams, r: f64, t: f64) -> Result<f64> {
    params.require(Geometry::Euclidean, "gp_euclid")?;
    if !(t > 0.0) || !(r >= 0.0) {
        return Err(domain("gp_euclid", format!("need r >= 0 and t > 0, got {r}, {t}")));
    }
    let pm1 = params.p - 1.0;
    Ok((-(params.kappa() / 2.0) * t.ln() - r * r / (4.0 * pm1 * t)).exp())
}

/// `c_{n,p} = (4(p−1))^{κ/2−1} Γ(κ/2−1)`, finite only for `κ > 2`.
pub fn gp_euclid_energy_constant(params: &PFlowParams) -> Result<f64> {
    params.require(Geometry::Euclidean, "gp_euclid_energy")?;
    let kappa = params.kappa();
    if !(kappa > 2.0) {
        return Err(domain("gp_euclid_energy", format!("time integral diverges for κ = {kappa} <= 2")));
    }
    let h = kappa / 2.0 - 1.0;
    Ok((h * (4.0 * (params.p - 1.0)).ln() + ln_gamma(h)?).exp())
}

/// `∫_0^∞ g_p(x,t) dt = c_{n,p} |x|^{−(n−p)/(p−1)}`.
pub fn gp_euclid_energy(params: &PFlowParams, r: f64) -> Result<f64> {
    let c = gp_euclid_energy_constant(params)?;
    if !(r > 0.0) {
        return Err(domain("gp_euclid_energy", format!("need r > 0, got {r}")));
    }
    let expo = (params.n as f64 - params.p) / (params.p - 1.0);
    Ok(c * r.powf(-expo))
}

/// Heisenberg p-flow profile
/// `G_p = t^{−β} ∫_ℝ e^{−iσλ/((p−1)t)} (λ/sinh λ)^α e^{−(r²/(4(p−1)t)) λ coth λ} dλ`,
/// evaluated as `(4π(p−1))^β / 2 · G*_{α,β}((r,σ),(p−1)t)`.
pub fn gp_heisenberg(params: &PFlowParams, pt: &RadialPoint, cfg: &QuadConfig) -> Result<EvalResult> {
    let kp = params.kernel_params()?;
    pt.validate()?;
    let pm1 = params.p - 1.0;
    let g = mehler_g(&kp, &RadialPoint::new(pt.r, pt.s, pm1 * pt.t)?, cfg)?;
    Ok(g.scaled(0.5 * (4.0 * PI * pm1).powf(kp.beta)))
}

/// Same profile as [`gp_heisenberg`] by direct cosine quadrature of its
/// defining integral.
pub fn gp_heisenberg_direct(params: &PFlowParams, pt: &RadialPoint, cfg: &QuadConfig) -> Result<EvalResult> {
    let kp = params.kernel_params()?;
    pt.validate()?;
    let tau = (params.p - 1.0) * pt.t;
    let freq = pt.s / tau;
    let c = pt.r * pt.r / (4.0 * tau);
    let res = try_integrate_semiinfinite(
        |l| Ok(2.0 * (freq * l).cos() * (kp.alpha * ln_x_over_sinh(l) - c * (1.0 + x_coth_minus_one(l))).exp()),
        0.0,
        1.0,
        Decay::Exponential,
        cfg,
    )?;
    Ok(res.scaled(pt.t.powf(-kp.beta)))
}

/// The constant `C_{n,p}` with `∫_0^∞ G_p dt = C_{n,p} N^{−(Q−p)/(p−1)}`:
/// `(4π(p−1))^β / (2(p−1))` times the energy constant at `(α(p), 1)`.
pub fn gp_heisenberg_energy_constant(params: &PFlowParams, variant: EnergyConstant) -> Result<f64> {
    let kp = params.kernel_params()?;
    let pm1 = params.p - 1.0;
    Ok((4.0 * PI * pm1).powf(kp.beta) / (2.0 * pm1) * energy_constant(kp.alpha, 1, variant)?)
}

/// `C_{n,p} N(r,s)^{−(Q−p)/(p−1)}`.
pub fn gp_heisenberg_energy_closed(params: &PFlowParams, r: f64, s: f64, variant: EnergyConstant) -> Result<f64> {
    let c = gp_heisenberg_energy_constant(params, variant)?;
    let n = gauge(r, s);
    if !(n > 0.0) || !n.is_finite() {
        return Err(domain("gp_heisenberg_energy", format!("need (r, s) != (0, 0), got ({r}, {s})")));
    }
    Ok(c * n.powf(-(params.q() - params.p) / (params.p - 1.0)))
}

/// `∫_0^∞ G_p((r,s),t) dt` by quadrature, split at `N²/(4(p−1))`.
pub fn gp_heisenberg_energy_numeric(params: &PFlowParams, r: f64, s: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    params.kernel_params()?;
    let n = gauge(r, s);
    if !(n > 0.0) || !n.is_finite() {
        return Err(domain("gp_heisenberg_energy", format!("need (r, s) != (0, 0), got ({r}, {s})")));
    }
    let t_star = cfg.time_split.unwrap_or(n * n / (4.0 * (params.p - 1.0)));
    try_integrate_time_profile(
        |t| Ok(gp_heisenberg(params, &RadialPoint::new(r, s, t)?, cfg)?.denoised()),
        t_star,
        cfg,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::KernelParams;
    use crate::quadrature::integrate_time_profile;

    fn cfg() -> QuadConfig {
        QuadConfig::default().with_rel_tol(1e-12)
    }

    #[test]
    fn euclidean_profile_values() {
        let p = PFlowParams::euclidean(3, 3.0).unwrap();
        assert!((gp_euclid(&p, 2.0, 1.0).unwrap() - (-0.5f64).exp()).abs() < 1e-15);
        let p2 = PFlowParams::euclidean(4, 2.0).unwrap();
        let (r, t): (f64, f64) = (1.3, 0.7);
        let gauss = t.powf(-2.0) * (-r * r / (4.0 * t)).exp();
        assert!((gp_euclid(&p2, r, t).unwrap() - gauss).abs() < 1e-14);
        let p3 = PFlowParams::euclidean(5, 2.5).unwrap();
        assert!((gp_euclid(&p3, 0.0, 2.0).unwrap() - 2f64.powf(-p3.kappa() / 2.0)).abs() < 1e-15);
        assert!(gp_euclid(&PFlowParams::heisenberg(1, 2.0).unwrap(), 1.0, 1.0).is_err());
    }

    #[test]
    fn euclidean_energy_closed_form() {
        let p = PFlowParams::euclidean(3, 2.0).unwrap();
        assert!((gp_euclid_energy_constant(&p).unwrap() - 2.0 * PI.sqrt()).abs() < 1e-14);
        assert!((gp_euclid_energy(&p, 1.0).unwrap() - 3.5449077018110318).abs() < 1e-14);
        assert!((gp_euclid_energy(&p, 2.0).unwrap() - PI.sqrt()).abs() < 1e-14);
        // κ = 2
        assert!(gp_euclid_energy(&PFlowParams::euclidean(3, 3.0).unwrap(), 1.0).is_err());
    }

    #[test]
    fn euclidean_energy_by_quadrature() {
        for (n, p, r) in [(4u32, 2.5, 1.3), (3, 1.5, 0.8)] {
            let pp = PFlowParams::euclidean(n, p).unwrap();
            let num = integrate_time_profile(|t| gp_euclid(&pp, r, t).unwrap(), 1.0, &cfg()).unwrap().value;
            let closed = gp_euclid_energy(&pp, r).unwrap();
            assert!(((num - closed) / closed).abs() < 1e-10, "{num} vs {closed}");
        }
    }

    #[test]
    fn quadratic_case_is_the_group_kernel() {
        // p = 2, n = 1: the bare Fourier integral t^β G_p is (4πt)²/2 · G*_{1,2}
        let pp = PFlowParams::heisenberg(1, 2.0).unwrap();
        let pt = RadialPoint::new(0.9, 0.4, 0.8).unwrap();
        let gp = gp_heisenberg(&pp, &pt, &cfg()).unwrap().value;
        let g = mehler_g(&KernelParams::new(1.0, 2.0, 1).unwrap(), &pt, &cfg()).unwrap().value;
        let want = g * (4.0 * PI * pt.t).powi(2) / 2.0;
        let bare = gp * pt.t.powi(2);
        assert!(((bare - want) / want).abs() < 1e-13);
    }

    #[test]
    fn two_code_paths_agree() {
        let pp = PFlowParams::heisenberg(1, 3.0).unwrap();
        for (r, s, t) in [(1.0, 0.5, 1.0), (0.3, 1.2, 0.4), (2.0, 0.0, 1.5)] {
            let pt = RadialPoint::new(r, s, t).unwrap();
            let a = gp_heisenberg(&pp, &pt, &cfg()).unwrap().value;
            let b = gp_heisenberg_direct(&pp, &pt, &cfg()).unwrap().value;
            assert!(((a - b) / b).abs() < 1e-10, "{a} vs {b}");
        }
    }

    #[test]
    fn heisenberg_homogeneity() {
        let pp = PFlowParams::heisenberg(2, 2.5).unwrap();
        let pt = RadialPoint::new(0.7, 0.6, 0.9).unwrap();
        let g0 = gp_heisenberg(&pp, &pt, &cfg()).unwrap().value;
        let g1 = gp_heisenberg(&pp, &pt.dilate(2.0), &cfg()).unwrap().value;
        assert!((g1 / g0 / 2f64.powf(-2.0 * pp.beta()) - 1.0).abs() < 1e-10);
    }
}
