use super::record::{inputs, non_decreasing_steps, Recorder};
use super::VerifyConfig;
use crate::kernels::{cauchy_solve_k1, mehler_kernel_k, try_cauchy_solve_k1};
use crate::Result;

const ALPHA: f64 = 1.5;

fn datum(rho: f64, s: f64) -> f64 {
    (-rho * rho - s * s).exp()
}

pub(super) fn run(rec: &mut Recorder, cfg: &VerifyConfig) {
    let q = &cfg.quad.cauchy;
    let tol = &cfg.tolerances;
    let (r, sigma) = (1.0, 0.0);

    // Gaussian datum, sup norm 1, as t → 0.
    let times = [1e-1, 1e-2, 1e-3];
    let gaps: Result<Vec<f64>> = times
        .iter()
        .map(|&t| Ok((cauchy_solve_k1(ALPHA, datum, r, sigma, t, q)?.value - datum(r, sigma)).abs()))
        .collect();
    let mut inp = inputs(&[("alpha", ALPHA), ("r", r), ("sigma", sigma)]);
    if let Ok(g) = &gaps {
        for (t, v) in times.iter().zip(g) {
            inp.insert(format!("gap_at_t_{t}"), *v);
        }
    }
    rec.bound("recovery-decreasing", "cauchy:initial-data", inp.clone(), 0.0, || {
        Ok(non_decreasing_steps(gaps.as_ref().map_err(Clone::clone)?))
    });
    rec.bound("recovery-smallest-t", "cauchy:initial-data", inp, tol.cauchy_recovery, || {
        Ok(*gaps.as_ref().map_err(Clone::clone)?.last().expect("three times"))
    });

    // Mass of the kernel: constant datum.
    let mass_times = [0.25, 0.5, 1.0];
    let masses: Result<Vec<f64>> = mass_times
        .iter()
        .map(|&t| Ok(cauchy_solve_k1(ALPHA, |_, _| 1.0, r, sigma, t, q)?.value))
        .collect();
    let mean = masses.as_ref().map(|m| m.iter().sum::<f64>() / m.len() as f64).map_err(Clone::clone);
    for (i, t) in mass_times.into_iter().enumerate() {
        rec.compare(format!("mass-{i}"), "cauchy:mass", inputs(&[("alpha", ALPHA), ("r", r), ("t", t)]), tol.cauchy_mass, || {
            Ok((masses.as_ref().map_err(Clone::clone)?[i], mean.clone()?))
        });
    }

    // ∫∫ 𝒦(x, y, t₁) 𝒦(y, x', t₂) dy = 𝒦(x, x', t₁ + t₂)
    let (t1, t2, r2, sigma2) = (0.3, 0.4, 0.8, 0.3);
    let qk = &cfg.quad.kernels;
    rec.compare(
        "semigroup",
        "cauchy:semigroup",
        inputs(&[("alpha", ALPHA), ("r", r), ("sigma", sigma), ("r2", r2), ("sigma2", sigma2), ("t1", t1), ("t2", t2)]),
        tol.semigroup,
        || {
            let lhs = try_cauchy_solve_k1(
                ALPHA,
                |rho, sp| Ok(mehler_kernel_k(ALPHA, 1, rho, r2, (sp - sigma2).abs(), t2, q)?.denoised()),
                r,
                sigma,
                t1,
                q,
            )?;
            let rhs = mehler_kernel_k(ALPHA, 1, r, r2, (sigma - sigma2).abs(), t1 + t2, qk)?;
            Ok((lhs.value, rhs.value))
        },
    );
}
