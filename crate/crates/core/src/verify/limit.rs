use std::f64::consts::PI;

use super::record::{inputs, non_decreasing_steps, Recorder};
use super::VerifyConfig;
use crate::kernels::{dominating_bound, kernel_k_at_pole, kernel_k_integrand, mehler_kernel_k, pole_prefactor, RadialPoint};
use crate::Result;

const PAIRS: [(f64, u32); 2] = [(0.7, 1), (1.5, 2)];
const POINT: (f64, f64, f64) = (1.0, 0.5, 1.0);

/// `|𝒦(r, ρ=ε, |σ−σ'|, t) / pole − 1|` for `ε = 10^{−1..−4}`, with `σ'` of
/// length `ε` pointing away from `σ`.
fn gaps(alpha: f64, k: u32, q: &crate::quadrature::QuadConfig) -> Result<Vec<f64>> {
    let (r, s, t) = POINT;
    let pole = kernel_k_at_pole(alpha, k, &RadialPoint::new(r, s, t)?, q)?.value;
    (1..=4)
        .map(|j| {
            let eps = 10f64.powi(-j);
            let v = mehler_kernel_k(alpha, k, r, eps, s + eps, t, q)?.value;
            Ok((v / pole - 1.0).abs())
        })
        .collect()
}

pub(super) fn run(rec: &mut Recorder, cfg: &VerifyConfig) {
    let q = &cfg.quad.kernels;
    let tol = &cfg.tolerances;
    rec.compare("prefactor-alpha-1", "kernel:pole-prefactor", inputs(&[("alpha", 1.0)]), 1e-15, || {
        Ok((pole_prefactor(1.0)?, 2.0 * PI))
    });
    rec.compare("prefactor-alpha-2", "kernel:pole-prefactor", inputs(&[("alpha", 2.0)]), 1e-15, || {
        Ok((pole_prefactor(2.0)?, 2.0 * PI * PI))
    });

    for (i, (alpha, k)) in PAIRS.into_iter().enumerate() {
        let g = gaps(alpha, k, q);
        let mut inp = inputs(&[("alpha", alpha), ("k", k as f64)]);
        if let Ok(g) = &g {
            for (j, v) in g.iter().enumerate() {
                inp.insert(format!("gap_{}", j + 1), *v);
            }
        }
        rec.bound(format!("pair-{i}-decreasing"), "kernel:pole-limit", inp.clone(), 0.0, || {
            Ok(non_decreasing_steps(g.as_ref().map_err(Clone::clone)?))
        });
        rec.bound(format!("pair-{i}-final-gap"), "kernel:pole-limit", inp, tol.pole_gap, || {
            Ok(*g.as_ref().map_err(Clone::clone)?.last().expect("four gaps"))
        });

        // Majorant on a λ grid at ρ = 0.5, where ρr/(2t) ≤ 1.
        let (r, _, t) = POINT;
        let rho = 0.5;
        rec.bound(
            format!("pair-{i}-dominating-bound"),
            "kernel:dominating-bound",
            inputs(&[("alpha", alpha), ("k", k as f64), ("r", r), ("rho", rho), ("t", t)]),
            0.0,
            || {
                let mut violations = 0.0;
                for n in 0..=400 {
                    let lam = 0.05 * n as f64;
                    if kernel_k_integrand(alpha, k, r, rho, t, lam)? > dominating_bound(alpha, k, r, t, lam)? {
                        violations += 1.0;
                    }
                }
                Ok(violations)
            },
        );
    }
}
