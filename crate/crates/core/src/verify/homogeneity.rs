use super::record::{inputs, Recorder};
use super::VerifyConfig;
use crate::kernels::{mehler_g, KernelParams, RadialPoint};

type Params = (f64, f64, u32);
type Point = (f64, f64, f64);

/// `(α, β, k)` and a base point `(r, s, t)`.
const CASES: [(Params, Point); 4] = [
    ((1.0, 2.0, 1), (1.0, 1.0, 1.0)),
    ((1.5, 3.5, 2), (0.8, 0.3, 0.6)),
    ((0.5, 3.5, 3), (1.2, 1.0, 0.9)),
    ((2.5, 2.9, 1), (0.4, 0.7, 0.5)),
];

const DILATIONS: [f64; 3] = [0.5, 2.0, 3.0];

pub(super) fn run(rec: &mut Recorder, cfg: &VerifyConfig) {
    let q = &cfg.quad.kernels;
    for (i, ((alpha, beta, k), (r, s, t))) in CASES.into_iter().enumerate() {
        for (j, ell) in DILATIONS.into_iter().enumerate() {
            rec.compare(
                format!("dilation-{i}-{j}"),
                "kernel:homogeneity",
                inputs(&[("alpha", alpha), ("beta", beta), ("k", k as f64), ("r", r), ("s", s), ("t", t), ("ell", ell)]),
                cfg.tolerances.homogeneity,
                || {
                    let p = KernelParams::new(alpha, beta, k)?;
                    let base = mehler_g(&p, &RadialPoint::new(r, s, t)?, q)?.value;
                    let scaled = mehler_g(&p, &RadialPoint::new(ell * r, ell * ell * s, ell * ell * t)?, q)?.value;
                    Ok((scaled, ell.powf(p.homogeneity_degree()) * base))
                },
            );
        }
    }
}
