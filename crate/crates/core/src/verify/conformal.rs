use serde::{Deserialize, Serialize};

use super::record::{inputs, Recorder};
use super::report::{Adjudication, AdjudicationCase};
use super::VerifyConfig;
use crate::kernels::{energy_closed, energy_numeric, gauge, EnergyConstant};
use crate::quadrature::QuadConfig;
use crate::Result;

/// One point of the conformal energy grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConformalPoint {
    pub alpha: f64,
    pub k: u32,
    pub r: f64,
    pub s: f64,
}

/// `(α, k) ∈ {(0.5,1), (1,1), (1.7,2), (2.5,3)}` crossed with
/// `r ∈ {0.5, 1, 2}`, `s ∈ {0, 0.5, 2}`.
pub fn default_conformal_grid() -> Vec<ConformalPoint> {
    let mut out = Vec::new();
    for (alpha, k) in [(0.5, 1), (1.0, 1), (1.7, 2), (2.5, 3)] {
        for r in [0.5, 1.0, 2.0] {
            for s in [0.0, 0.5, 2.0] {
                out.push(ConformalPoint { alpha, k, r, s });
            }
        }
    }
    out
}

fn gauge_power(alpha: f64, k: u32) -> f64 {
    2.0 * alpha + 2.0 * k as f64 - 2.0
}

/// `energy · N^{2α+2k−2}`.
fn normalized_energy(p: &ConformalPoint, q: &QuadConfig) -> Result<f64> {
    let e = energy_numeric(p.alpha, p.k, p.r, p.s, q)?;
    Ok(e.value * gauge(p.r, p.s).powf(gauge_power(p.alpha, p.k)))
}

/// Reference case for the printed-constant comparison.
const REFERENCE: (f64, u32, f64, f64) = (1.0, 1, 1.0, 0.0);

fn case(alpha: f64, k: u32, r: f64, s: f64, q: &QuadConfig) -> AdjudicationCase {
    let num = energy_numeric(alpha, k, r, s, q).map(|e| e.value);
    let ratio = |v: EnergyConstant| -> f64 {
        match (&num, energy_closed(alpha, k, r, s, v)) {
            (Ok(n), Ok(c)) => n / c,
            _ => f64::NAN,
        }
    };
    AdjudicationCase {
        alpha,
        k,
        r,
        s,
        ratio_thm: ratio(EnergyConstant::Theorem),
        ratio_meh: ratio(EnergyConstant::Mehler),
    }
}

pub(super) fn run(rec: &mut Recorder, cfg: &VerifyConfig) -> Adjudication {
    let q = &cfg.quad.energy;
    let tol = &cfg.tolerances;
    let points = if cfg.conformal_points.is_empty() {
        default_conformal_grid()
    } else {
        cfg.conformal_points.clone()
    };

    let mut groups: Vec<((f64, u32), Vec<ConformalPoint>)> = Vec::new();
    for p in points {
        match groups.iter_mut().find(|(key, _)| *key == (p.alpha, p.k)) {
            Some((_, v)) => v.push(p),
            None => groups.push(((p.alpha, p.k), vec![p])),
        }
    }

    let mut cases = Vec::new();
    for (g, ((alpha, k), pts)) in groups.iter().enumerate() {
        let values: Vec<Result<f64>> = pts.iter().map(|p| normalized_energy(p, q)).collect();
        let ok: Vec<f64> = values.iter().filter_map(|v| v.as_ref().ok().copied()).collect();
        let mean = ok.iter().sum::<f64>() / ok.len().max(1) as f64;
        let on_axis = pts.iter().any(|p| p.r == 0.0);
        let spread_tol = if on_axis { tol.conformal_spread_axis } else { tol.conformal_spread };

        for (i, (p, v)) in pts.iter().zip(&values).enumerate() {
            rec.compare(
                format!("group-{g}-point-{i:02}"),
                "energy:conformal",
                inputs(&[("alpha", p.alpha), ("k", p.k as f64), ("r", p.r), ("s", p.s)]),
                spread_tol,
                || v.clone().map(|v| (v, mean)),
            );
        }
        rec.bound(
            format!("group-{g}-spread"),
            "energy:conformal",
            inputs(&[("alpha", *alpha), ("k", *k as f64), ("points", pts.len() as f64)]),
            spread_tol,
            || {
                if ok.len() != pts.len() || ok.len() < 2 {
                    return Err(crate::Error::Config("not enough evaluated points".into()));
                }
                let max = ok.iter().cloned().fold(f64::MIN, f64::max);
                let min = ok.iter().cloned().fold(f64::MAX, f64::min);
                Ok((max - min) / mean.abs())
            },
        );
        let first = pts[0];
        cases.push(case(first.alpha, first.k, first.r, first.s, q));
    }

    let (alpha, k, r, s) = REFERENCE;
    let reference = case(alpha, k, r, s, q);
    let ratio = reference.ratio_thm;
    let matched = if (ratio - 1.0).abs() <= tol.adjudication {
        "thm_gen"
    } else if (ratio / 4.0 - 1.0).abs() <= tol.adjudication {
        "meh_Cmk"
    } else {
        "none"
    };
    Adjudication {
        matched_constant: matched.to_string(),
        ratio,
        reference,
        cases,
    }
}
