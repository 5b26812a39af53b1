use std::f64::consts::{LN_2, PI};

use serde::{Deserialize, Serialize};

use super::{gauge, mehler_g, KernelParams, RadialPoint};
use crate::error::domain;
use crate::quadrature::{try_integrate_time_profile, EvalResult, QuadConfig};
use crate::specfun::ln_gamma;
use crate::Result;

/// Which closed-form constant to use for `∫_0^∞ G_{α,α+k} dt`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EnergyConstant {
    /// `2^{α+2k−4} Γ(α/2) Γ((α+k−1)/2) / π^{(2α+k+1)/2}`.
    #[serde(rename = "thm")]
    Theorem,
    /// The Gaveau–Hulanicki constant `C(m,k) = 2^{m/2+2k−2} Γ(m/4) Γ((m/2+k−1)/2) π^{−(m+k+1)/2}`
    /// at `m = 2α`.
    #[serde(rename = "meh")]
    Mehler,
}

impl EnergyConstant {
    pub fn name(&self) -> &'static str {
        match self {
            EnergyConstant::Theorem => "thm",
            EnergyConstant::Mehler => "meh",
        }
    }
}

impl std::str::FromStr for EnergyConstant {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "thm" => Ok(EnergyConstant::Theorem),
            "meh" => Ok(EnergyConstant::Mehler),
            other => Err(crate::Error::Config(format!("unknown energy constant '{other}' (thm|meh)"))),
        }
    }
}

/// The constant multiplying `N^{−(2α+2k−2)}`.
pub fn energy_constant(alpha: f64, k: u32, variant: EnergyConstant) -> Result<f64> {
    if !(alpha > 0.0) || k == 0 {
        return Err(domain("energy_constant", format!("need alpha > 0, k >= 1, got {alpha}, {k}")));
    }
    let kf = k as f64;
    if !(alpha + kf > 1.0) {
        return Err(domain("energy_constant", "need alpha + k > 1"));
    }
    let two_exp = match variant {
        EnergyConstant::Theorem => alpha + 2.0 * kf - 4.0,
        EnergyConstant::Mehler => alpha + 2.0 * kf - 2.0,
    };
    let ln = two_exp * LN_2 + ln_gamma(alpha / 2.0)? + ln_gamma((alpha + kf - 1.0) / 2.0)?
        - 0.5 * (2.0 * alpha + kf + 1.0) * PI.ln();
    Ok(ln.exp())
}

/// Closed-form energy `C · N(r,s)^{−(2α+2k−2)}`.
pub fn energy_closed(alpha: f64, k: u32, r: f64, s: f64, variant: EnergyConstant) -> Result<f64> {
    let n = gauge(r, s);
    if !(n > 0.0) || !n.is_finite() {
        return Err(domain("energy_closed", format!("need (r, s) != (0, 0), got ({r}, {s})")));
    }
    let expo = 2.0 * alpha + 2.0 * k as f64 - 2.0;
    Ok(energy_constant(alpha, k, variant)? * n.powf(-expo))
}

/// `∫_0^∞ G*_{α,α+k}((r,s),t) dt`, split at `t* = N(r,s)²/4` unless the
/// configuration overrides it.
///
/// Points with `r = 0` are slow: the small-`t` integrands are highly
/// oscillatory.
pub fn energy_numeric(alpha: f64, k: u32, r: f64, s: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    let params = KernelParams::critical(alpha, k)?;
    let n = gauge(r, s);
    if !(n > 0.0) || !n.is_finite() {
        return Err(domain("energy_numeric", format!("need (r, s) != (0, 0), got ({r}, {s})")));
    }
    let t_star = cfg.time_split.unwrap_or(n * n / 4.0);
    try_integrate_time_profile(
        |t| {
            let g = mehler_g(&params, &RadialPoint::new(r, s, t)?, cfg)?;
            Ok(g.denoised())
        },
        t_star,
        cfg,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_constants() {
        let thm = energy_constant(1.0, 1, EnergyConstant::Theorem).unwrap();
        assert!((thm - 1.0 / (2.0 * PI)).abs() < 1e-15);
        let meh = energy_constant(1.0, 1, EnergyConstant::Mehler).unwrap();
        assert!((meh - 2.0 / PI).abs() < 1e-15);
        for (a, k) in [(0.5, 1), (1.7, 2), (2.5, 3)] {
            let r = energy_constant(a, k, EnergyConstant::Mehler).unwrap()
                / energy_constant(a, k, EnergyConstant::Theorem).unwrap();
            assert!((r - 4.0).abs() < 1e-13);
        }
        assert!(energy_constant(0.0, 1, EnergyConstant::Theorem).is_err());
        assert_eq!("thm".parse::<EnergyConstant>().unwrap(), EnergyConstant::Theorem);
        assert!("x".parse::<EnergyConstant>().is_err());
    }

    #[test]
    fn closed_form_gauge_power_law() {
        let (a, k, r, s) = (1.7, 2, 0.8, 0.3);
        let ell: f64 = 2.5;
        let e0 = energy_closed(a, k, r, s, EnergyConstant::Theorem).unwrap();
        let e1 = energy_closed(a, k, ell * r, ell * ell * s, EnergyConstant::Theorem).unwrap();
        assert!((e0 / e1 / ell.powf(2.0 * a + 2.0 * k as f64 - 2.0) - 1.0).abs() < 1e-13);
        assert!(energy_closed(a, k, 0.0, 0.0, EnergyConstant::Theorem).is_err());
    }

    #[test]
    fn numeric_energy_scales_and_decreases() {
        let cfg = QuadConfig::default().with_rel_tol(1e-9);
        let (a, k) = (1.5, 1);
        let e0 = energy_numeric(a, k, 1.0, 0.5, &cfg).unwrap();
        let e1 = energy_numeric(a, k, 2.0, 2.0, &cfg).unwrap();
        assert!(e0.value > 0.0);
        let want = 2f64.powf(-(2.0 * a + 2.0 * k as f64 - 2.0));
        assert!((e1.value / e0.value / want - 1.0).abs() < 1e-8);
        let e2 = energy_numeric(a, k, 1.5, 0.5, &cfg).unwrap();
        assert!(e2.value < e0.value);
    }

    #[test]
    fn numeric_energy_matches_one_printed_constant() {
        let cfg = QuadConfig::default().with_rel_tol(1e-10);
        let e = energy_numeric(1.0, 1, 1.0, 0.0, &cfg).unwrap().value;
        let ratio = e / energy_closed(1.0, 1, 1.0, 0.0, EnergyConstant::Theorem).unwrap();
        assert!((ratio - 1.0).abs() < 1e-4 || (ratio - 4.0).abs() < 4e-4, "ratio {ratio}");
    }
}
