use super::record::{inputs, non_decreasing_steps, Recorder};
use super::VerifyConfig;
use crate::diffops::{
    grushin_residual, neumann_probes, neumann_trace, ou_residual, richardson, riccati_check, StencilConfig,
};
use crate::kernels::{mehler_kernel_k, ou_evolve_1d, ou_mehler_kernel, RadialPoint};
use crate::Result;

/// Spatial step `h` with the parabolic time step `h²`.
pub(super) fn parabolic(h: f64) -> Result<StencilConfig> {
    StencilConfig::new(h, h, h * h)
}

/// `(α, k, r, s, t, ρ)`: kernel parameter, evaluation point and pole radius
/// (pole at `σ' = 0`).
const GRUSHIN_POINTS: [(f64, u32, f64, f64, f64, f64); 2] =
    [(1.5, 1, 1.0, 0.7, 0.8, 0.6), (0.8, 2, 1.2, 0.5, 0.6, 0.9)];

pub(super) fn run(rec: &mut Recorder, cfg: &VerifyConfig) {
    let q = &cfg.quad.kernels;
    let tol = &cfg.tolerances;

    for (i, (alpha, k, r, s, t, rho)) in GRUSHIN_POINTS.into_iter().enumerate() {
        let kernel = |r: f64, s: f64, t: f64| Ok(mehler_kernel_k(alpha, k, r, rho, s, t, q)?.value);
        let inp = inputs(&[("alpha", alpha), ("k", k as f64), ("r", r), ("s", s), ("t", t), ("rho", rho)]);
        let pt = RadialPoint::new(r, s, t);
        let ladder = pt
            .clone()
            .and_then(|pt| richardson(|c| grushin_residual(kernel, alpha, k, &pt, c), &parabolic(0.02)?, 3));
        match &ladder {
            Ok((res, orders)) => {
                for (j, o) in orders.iter().enumerate() {
                    let mut inp = inp.clone();
                    inp.insert("h".into(), 0.02 * 0.5f64.powi(j as i32));
                    inp.insert("residual".into(), res[j]);
                    inp.insert("residual_half".into(), res[j + 1]);
                    rec.compare(format!("grushin-{i}-order-{j}"), "pde:grushin", inp, tol.order_deviation / 2.0, || {
                        Ok((*o, 2.0))
                    });
                }
            }
            Err(e) => {
                let e = e.clone();
                rec.compare(format!("grushin-{i}-order-0"), "pde:grushin", inp.clone(), 0.0, || Err(e));
            }
        }
        let mut at = inp.clone();
        at.insert("h".into(), 5e-3);
        rec.bound(format!("grushin-{i}-residual"), "pde:grushin", at, tol.grushin_residual, || {
            grushin_residual(kernel, alpha, k, &pt.clone()?, &parabolic(5e-3)?)
        });
    }

    for (i, alpha) in [0.5, 1.5, 3.2].into_iter().enumerate() {
        for (j, h) in [0.1, 0.02, 5e-3].into_iter().enumerate() {
            rec.bound(
                format!("caloric-{i}-{j}"),
                "pde:caloric-polynomial",
                inputs(&[("alpha", alpha), ("k", 2.0), ("h", h)]),
                tol.caloric,
                || {
                    let pt = RadialPoint::new(0.9, 0.6, 0.4)?;
                    grushin_residual(|r, _, t| Ok(4.0 * alpha * t + r * r), alpha, 2, &pt, &StencilConfig::uniform(h)?)
                },
            );
        }
    }

    // Neumann trace of 𝒦_{0.8,1}(·, ρ = 1, s = 0.3, t = 1).
    let (alpha, rho, s, t) = (0.8, 1.0, 0.3, 1.0);
    let probes = neumann_probes();
    let trace = neumann_trace(|r| Ok(mehler_kernel_k(alpha, 1, r, rho, s, t, q)?.value), alpha, &probes);
    let mut inp = inputs(&[("alpha", alpha), ("rho", rho), ("s", s), ("t", t)]);
    if let Ok(tr) = &trace {
        for (r, v) in probes.iter().zip(tr) {
            inp.insert(format!("trace_at_{r:.6}"), *v);
        }
    }
    rec.bound("neumann-decreasing", "pde:neumann", inp.clone(), 0.0, || {
        let mags: Vec<f64> = trace.as_ref().map_err(Clone::clone)?.iter().map(|v| v.abs()).collect();
        Ok(non_decreasing_steps(&mags))
    });
    rec.bound("neumann-final", "pde:neumann", inp, tol.neumann_final, || {
        Ok(*trace.as_ref().map_err(Clone::clone)?.last().expect("probes"))
    });
    for (i, alpha) in [0.3, 0.8, 1.7].into_iter().enumerate() {
        rec.bound(format!("neumann-control-{i}"), "pde:neumann-control", inputs(&[("alpha", alpha)]), tol.neumann_control, || {
            let tr = neumann_trace(|r: f64| Ok(r.powf(2.0 - 2.0 * alpha)), alpha, &probes)?;
            Ok(tr.iter().map(|v| (v - (2.0 - 2.0 * alpha)).abs()).fold(0.0, f64::max))
        });
    }

    // Mehler evolution of e^{−y²} in one dimension.
    let (omega, x, t) = (1.0, 0.5, 0.3);
    rec.bound("ou-residual", "pde:ou", inputs(&[("omega", omega), ("x", x), ("t", t), ("h", 1e-3)]), tol.ou_residual, || {
        let u = |y: &[f64], t: f64| Ok(ou_evolve_1d(omega, |v: f64| (-v * v).exp(), y[0], t, q)?.value);
        ou_residual(u, omega, &[x], t, &parabolic(1e-3)?)
    });
    // Gauss-kernel limit along ω = 10^{−5..−8}. The relative gap is
    // m·t·ω to first order.
    let (x, y, t) = ([1.0, 0.0], [0.0, 1.0], 0.5f64);
    let heat = (-2.0 / (4.0 * t)).exp() / (4.0 * std::f64::consts::PI * t);
    let omegas = [1e-5, 1e-6, 1e-7, 1e-8];
    let gaps: Result<Vec<f64>> = omegas
        .iter()
        .map(|&w| Ok((ou_mehler_kernel(2, w, &x, &y, t)? / heat - 1.0).abs()))
        .collect();
    let mut inp = inputs(&[("m", 2.0), ("t", t)]);
    if let Ok(g) = &gaps {
        for (w, v) in omegas.iter().zip(g) {
            inp.insert(format!("gap_at_omega_{w:e}"), *v);
        }
    }
    rec.bound("ou-heat-limit-decreasing", "pde:ou-heat-limit", inp.clone(), 0.0, || {
        Ok(non_decreasing_steps(gaps.as_ref().map_err(Clone::clone)?))
    });
    rec.bound("ou-heat-limit-final", "pde:ou-heat-limit", inp, tol.ou_heat_limit, || {
        Ok(*gaps.as_ref().map_err(Clone::clone)?.last().expect("four gaps"))
    });

    // Riccati transform with the oscillator ansatz h = (ω/2)r² + 2αωt,
    // Φ = ω²r², and the exact drifted-Bessel solution
    // f = e^{−4ωt}(r² − α/ω) + c; the order is measured on the residual of
    // v = e^{−h} f.
    let (alpha, omega, r, t) = (1.3, 0.8, 0.9, 0.6);
    let h = move |r: f64, t: f64| Ok(0.5 * omega * r * r + 2.0 * alpha * omega * t);
    let phi = move |r: f64, _: f64| Ok(omega * omega * r * r);
    let f = move |r: f64, t: f64| Ok((-4.0 * omega * t).exp() * (r * r - alpha / omega) + 0.3);
    let inp = inputs(&[("alpha", alpha), ("omega", omega), ("r", r), ("t", t)]);
    let ladder = StencilConfig::uniform(0.02)
        .and_then(|c| richardson(|c| riccati_check(h, phi, f, alpha, (r, t), c).map(|o| o.v), &c, 3));
    for j in 0..2 {
        let mut inp = inp.clone();
        inp.insert("h".into(), 0.02 * 0.5f64.powi(j as i32));
        if let Ok((_, orders)) = &ladder {
            inp.insert("order".into(), orders[j]);
        }
        rec.bound(format!("riccati-order-{j}"), "pde:riccati", inp, 0.0, || {
            let (_, orders) = ladder.as_ref().map_err(Clone::clone)?;
            Ok((tol.riccati_min_order - orders[j]).max(0.0))
        });
    }
    rec.bound("riccati-ansatz", "pde:riccati", inp.clone(), tol.caloric, || {
        Ok(riccati_check(h, phi, f, alpha, (r, t), &StencilConfig::uniform(0.01)?)?.riccati)
    });
    rec.bound("riccati-lemma-identity", "pde:riccati", inp, tol.lemma_identity, || {
        let hh = |r: f64, t: f64| Ok(0.3 * r.sin() + t * r);
        let pp = |r: f64, t: f64| Ok(r * t + 1.0);
        let ff = |r: f64, t: f64| Ok((r - t).cos() + 2.0);
        Ok(riccati_check(hh, pp, ff, alpha, (1.1, 0.7), &StencilConfig::uniform(5e-3)?)?.identity_defect())
    });
}
