use super::pde::parabolic;
use super::record::{inputs, Recorder};
use super::VerifyConfig;
use crate::diffops::pflow_radial_residual;
use crate::kernels::{
    gauge, gp_euclid, gp_euclid_energy, gp_heisenberg, gp_heisenberg_direct, gp_heisenberg_energy_closed,
    gp_heisenberg_energy_numeric, EnergyConstant, PFlowParams, RadialPoint,
};
use crate::quadrature::integrate_time_profile;
use crate::Result;

pub(super) fn run(rec: &mut Recorder, cfg: &VerifyConfig) {
    let tol = &cfg.tolerances;

    let (n, p, r, t) = (3, 2.5, 1.2, 0.7);
    rec.bound(
        "radial-residual",
        "pflow:radial-equation",
        inputs(&[("n", n as f64), ("p", p), ("r", r), ("t", t), ("h", 1e-3)]),
        tol.pflow_residual,
        || {
            let params = PFlowParams::euclidean(n, p)?;
            pflow_radial_residual(|r, t| gp_euclid(&params, r, t), n, p, (r, t), &parabolic(1e-3)?)
        },
    );

    for (i, (n, p, r)) in [(4, 2.5, 1.3), (5, 1.5, 0.7)].into_iter().enumerate() {
        rec.compare(
            format!("euclid-energy-{i}"),
            "pflow:euclid-energy",
            inputs(&[("n", n as f64), ("p", p), ("r", r)]),
            tol.pflow_energy,
            || {
                let params = PFlowParams::euclidean(n, p)?;
                let t_star = r * r / (4.0 * (p - 1.0));
                let num = integrate_time_profile(|t| gp_euclid(&params, r, t).unwrap_or(f64::NAN), t_star, &cfg.quad.identities)?;
                Ok((num.value, gp_euclid_energy(&params, r)?))
            },
        );
    }

    for (i, (n, p, (r, s, t))) in [(1, 3.0, (1.0, 0.5, 1.0)), (2, 2.5, (0.8, 0.3, 0.6))].into_iter().enumerate() {
        rec.compare(
            format!("heisenberg-paths-{i}"),
            "pflow:heisenberg-paths",
            inputs(&[("n", n as f64), ("p", p), ("r", r), ("s", s), ("t", t)]),
            tol.heisenberg_paths,
            || {
                let params = PFlowParams::heisenberg(n, p)?;
                let pt = RadialPoint::new(r, s, t)?;
                let direct = gp_heisenberg_direct(&params, &pt, &cfg.quad.kernels)?;
                let via = gp_heisenberg(&params, &pt, &cfg.quad.kernels)?;
                Ok((direct.value, via.value))
            },
        );
    }

    // ∫ G_p dt · N^{(Q−p)/(p−1)} at (n, p) = (1, 3).
    let (n, p) = (1, 3.0);
    let points = [(1.0, 0.0), (0.5, 0.5), (2.0, 0.5), (1.0, 2.0)];
    let normalized: Vec<Result<(f64, f64)>> = points
        .iter()
        .map(|&(r, s)| {
            let params = PFlowParams::heisenberg(n, p)?;
            let e = gp_heisenberg_energy_numeric(&params, r, s, &cfg.quad.energy)?.value;
            let power = (params.q() - p) / (p - 1.0);
            let closed = gp_heisenberg_energy_closed(&params, r, s, EnergyConstant::Theorem)?;
            Ok((e * gauge(r, s).powf(power), e / closed))
        })
        .collect();
    let ok: Vec<f64> = normalized.iter().filter_map(|v| v.as_ref().ok().map(|x| x.0)).collect();
    let mean = ok.iter().sum::<f64>() / ok.len().max(1) as f64;
    for (i, ((r, s), v)) in points.iter().zip(&normalized).enumerate() {
        let inp = inputs(&[("n", n as f64), ("p", p), ("r", *r), ("s", *s)]);
        rec.compare(format!("heisenberg-energy-point-{i}"), "pflow:heisenberg-energy", inp.clone(), tol.heisenberg_spread, || {
            v.clone().map(|v| (v.0, mean))
        });
        rec.compare(format!("heisenberg-energy-constant-{i}"), "pflow:heisenberg-energy", inp, tol.heisenberg_constant, || {
            v.clone().map(|v| (v.1, 1.0))
        });
    }
    rec.bound(
        "heisenberg-energy-spread",
        "pflow:heisenberg-energy",
        inputs(&[("n", n as f64), ("p", p), ("points", points.len() as f64)]),
        tol.heisenberg_spread,
        || {
            if ok.len() != points.len() {
                return Err(crate::Error::Config("not every point evaluated".into()));
            }
            let max = ok.iter().cloned().fold(f64::MIN, f64::max);
            let min = ok.iter().cloned().fold(f64::MAX, f64::min);
            Ok((max - min) / mean.abs())
        },
    );
}
