use super::{central, clear_of_axis, StencilConfig};
use crate::error::domain;
use crate::kernels::RadialPoint;
use crate::Result;

/// `f''(r) + (a/r) f'(r)`, the Bessel operator `ℬ^{(a)}`, by central
/// differences with step `h`.
pub fn bessel_apply<F>(mut f: F, r: f64, a: f64, h: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    clear_of_axis(r, h)?;
    let (d1, d2) = central(f(r - h)?, f(r)?, f(r + h)?, h);
    Ok(d2 + a / r * d1)
}

/// Residual of the fractal Baouendi–Grushin equation
///
/// `∂_t u − ∂_rr u − ((2α−1)/r) ∂_r u − (r²/4)(∂_ss u + ((k−1)/s) ∂_s u)`
///
/// for `u(r, s, t)` depending on `σ` through `s = |σ|`.
pub fn grushin_residual<F>(mut u: F, alpha: f64, k: u32, at: &RadialPoint, cfg: &StencilConfig) -> Result<f64>
where
    F: FnMut(f64, f64, f64) -> Result<f64>,
{
    if !(alpha > 0.0) || k == 0 {
        return Err(domain("grushin_residual", "need alpha > 0 and k >= 1"));
    }
    let RadialPoint { r, s, t } = *at;
    clear_of_axis(r, cfg.h_r)?;
    clear_of_axis(s, cfg.h_s)?;
    clear_of_axis(t, cfg.h_t)?;
    let u0 = u(r, s, t)?;
    let (ur, urr) = central(u(r - cfg.h_r, s, t)?, u0, u(r + cfg.h_r, s, t)?, cfg.h_r);
    let (us, uss) = central(u(r, s - cfg.h_s, t)?, u0, u(r, s + cfg.h_s, t)?, cfg.h_s);
    let (ut, _) = central(u(r, s, t - cfg.h_t)?, u0, u(r, s, t + cfg.h_t)?, cfg.h_t);
    let bessel = urr + (2.0 * alpha - 1.0) / r * ur;
    let vertical = uss + (k as f64 - 1.0) / s * us;
    Ok(ut - bessel - 0.25 * r * r * vertical)
}

/// `r^{2α−1} u'(r)` at each probe radius, with the derivative taken by a
/// central difference of step `10⁻⁴·r`.
pub fn neumann_trace<F>(mut u: F, alpha: f64, probes: &[f64]) -> Result<Vec<f64>>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(alpha > 0.0) {
        return Err(domain("neumann_trace", "alpha must be positive"));
    }
    probes
        .iter()
        .map(|&r| {
            if !(r > 0.0) {
                return Err(domain("neumann_trace", format!("probe radius must be positive, got {r}")));
            }
            let h = 1e-4 * r;
            let d = (u(r + h)? - u(r - h)?) / (2.0 * h);
            Ok(r.powf(2.0 * alpha - 1.0) * d)
        })
        .collect()
}

/// The default probe radii `0.2·2^{−j}`, `j = 0..8`.
pub fn neumann_probes() -> Vec<f64> {
    (0..8).map(|j| 0.2 * 0.5f64.powi(j)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn bessel_on_quadratic_and_homogeneous_solution() {
        let v = bessel_apply(|r| Ok(r * r), 0.7, 1.0, 1e-2).unwrap();
        assert!((v - 4.0).abs() < 1e-10);
        let a = 2.6;
        let v = bessel_apply(|r: f64| Ok(r.powf(1.0 - a)), 1.3, a, 1e-4).unwrap();
        assert!(v.abs() < 1e-6, "{v}");
    }

    #[test]
    fn bessel_on_gaussian() {
        let (a, r) = (2.4, 1.5f64);
        let e = (-r * r).exp();
        let want = 4.0 * r * r * e - 2.0 * e - a / r * 2.0 * r * e;
        let got = bessel_apply(|x: f64| Ok((-x * x).exp()), r, a, 1e-4).unwrap();
        assert!((got - want).abs() < 1e-7, "{got} vs {want}");
    }

    #[test]
    fn bessel_step_guard() {
        assert!(matches!(
            bessel_apply(Ok, 0.1, 1.0, 0.05),
            Err(Error::StepTooLarge { .. })
        ));
    }

    #[test]
    fn caloric_polynomials() {
        for (alpha, k) in [(0.5, 1), (1.5, 2), (3.2, 3)] {
            let pt = RadialPoint::new(0.9, 0.6, 0.4).unwrap();
            let one = grushin_residual(|_, _, _| Ok(1.0), alpha, k, &pt, &StencilConfig::uniform(0.05).unwrap()).unwrap();
            assert_eq!(one, 0.0);
            for h in [0.1, 0.05, 0.01] {
                let cfg = StencilConfig::uniform(h).unwrap();
                let res = grushin_residual(|r, _, t| Ok(4.0 * alpha * t + r * r), alpha, k, &pt, &cfg).unwrap();
                assert!(res.abs() < 1e-10, "h={h}: {res}");
            }
        }
    }

    #[test]
    fn vertical_term_enters_with_r_squared_over_four() {
        // u = s² has ∂_ss u + ((k−1)/s)∂_s u = 2k.
        let (alpha, k) = (1.0, 2);
        let pt = RadialPoint::new(2.0, 0.5, 1.0).unwrap();
        let res = grushin_residual(|_, s, _| Ok(s * s), alpha, k, &pt, &StencilConfig::uniform(0.01).unwrap()).unwrap();
        assert!((res + 0.25 * 4.0 * 2.0 * k as f64).abs() < 1e-9, "{res}");
    }

    #[test]
    fn axis_guard() {
        let pt = RadialPoint::new(0.01, 0.5, 1.0).unwrap();
        let e = grushin_residual(|_, _, _| Ok(1.0), 1.0, 1, &pt, &StencilConfig::uniform(0.01).unwrap());
        assert!(matches!(e, Err(Error::StepTooLarge { .. })));
    }

    #[test]
    fn neumann_controls() {
        let probes = neumann_probes();
        assert_eq!(probes.len(), 8);
        let zero = neumann_trace(|_| Ok(3.0), 0.8, &probes).unwrap();
        assert!(zero.iter().all(|&v| v == 0.0));
        for alpha in [0.3, 0.8, 1.7] {
            let tr = neumann_trace(|r: f64| Ok(r.powf(2.0 - 2.0 * alpha)), alpha, &probes).unwrap();
            for v in tr {
                assert!((v - (2.0 - 2.0 * alpha)).abs() < 1e-6, "alpha={alpha}: {v}");
            }
        }
    }
}
