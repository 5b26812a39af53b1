use super::{central, clear_of_axis, StencilConfig};
use crate::error::domain;
use crate::Result;

/// Residual `f_t − (p−1) f_rr − ((n−1)/r) f_r` of the radial normalized
/// p-Laplacian flow.
pub fn pflow_radial_residual<F>(mut f: F, n: u32, p: f64, at: (f64, f64), cfg: &StencilConfig) -> Result<f64>
where
    F: FnMut(f64, f64) -> Result<f64>,
{
    if n == 0 || !(p > 1.0) {
        return Err(domain("pflow_radial_residual", "need n >= 1 and p > 1"));
    }
    let (r, t) = at;
    clear_of_axis(r, cfg.h_r)?;
    clear_of_axis(t, cfg.h_t)?;
    let f0 = f(r, t)?;
    let (fr, frr) = central(f(r - cfg.h_r, t)?, f0, f(r + cfg.h_r, t)?, cfg.h_r);
    let (ft, _) = central(f(r, t - cfg.h_t)?, f0, f(r, t + cfg.h_t)?, cfg.h_t);
    Ok(ft - (p - 1.0) * frr - (n as f64 - 1.0) / r * fr)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_and_caloric_polynomial() {
        let cfg = StencilConfig::uniform(1e-2).unwrap();
        assert_eq!(pflow_radial_residual(|_, _| Ok(2.0), 3, 2.5, (1.0, 1.0), &cfg).unwrap(), 0.0);
        for (n, p) in [(2, 1.5), (3, 2.5), (5, 4.0)] {
            let c = 2.0 * (p - 1.0) + 2.0 * (n as f64 - 1.0);
            let res = pflow_radial_residual(|r, t| Ok(r * r + c * t), n, p, (1.2, 0.7), &cfg).unwrap();
            assert!(res.abs() < 1e-10, "{res}");
        }
    }
}
