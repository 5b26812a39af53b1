//! Helpers shared by the CLI test targets.
#![allow(dead_code)]

use fmk_cli::subject::{Evaluation, Subject};
use fractal_mehler::kernels::{
    energy_closed, energy_numeric, gauge, gh_kernel, gp_euclid, gp_heisenberg, kernel_k_at_pole, mehler_g,
    mehler_kernel_k, ou_mehler_kernel, EnergyConstant, KernelParams, PFlowParams, RadialPoint,
};
use fractal_mehler::quadrature::QuadConfig;

pub fn fmk(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = fmk_cli::run(std::iter::once("fmk").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

pub fn eval_json(args: &[&str]) -> Evaluation {
    let mut full = vec!["eval"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--format", "json"]);
    let (code, out, err) = fmk(&full);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

/// Command-line arguments and the direct library value for each subject.
pub fn case(subject: Subject) -> (Vec<&'static str>, f64) {
    let q = QuadConfig::default();
    let pt = RadialPoint::new(1.0, 0.5, 0.8).unwrap();
    match subject {
        Subject::Gauge => (vec!["gauge", "--r", "1", "--s", "1"], gauge(1.0, 1.0)),
        Subject::MehlerG => (
            vec!["mehler-g", "--alpha", "1.5", "--beta", "3", "--k", "2", "--r", "1", "--s", "0.5", "--t", "0.8"],
            mehler_g(&KernelParams::new(1.5, 3.0, 2).unwrap(), &pt, &q).unwrap().value,
        ),
        Subject::KernelK => (
            vec!["kernel-k", "--alpha", "0.7", "--k", "1", "--r", "1", "--rho", "0.6", "--s", "0.5", "--t", "0.8"],
            mehler_kernel_k(0.7, 1, 1.0, 0.6, 0.5, 0.8, &q).unwrap().value,
        ),
        Subject::Pole => (
            vec!["pole", "--alpha", "2", "--k", "2", "--r", "1", "--s", "0.5", "--t", "0.8"],
            kernel_k_at_pole(2.0, 2, &pt, &q).unwrap().value,
        ),
        Subject::Gh => (
            vec!["gh", "--m", "3", "--k", "1", "--r", "1", "--s", "0.5", "--t", "0.8"],
            gh_kernel(3, 1, &pt, &q).unwrap().value,
        ),
        Subject::Ou => (
            vec!["ou", "--omega", "0.7", "--x", "1,-0.5", "--y", "0,1", "--t", "0.8"],
            ou_mehler_kernel(2, 0.7, &[1.0, -0.5], &[0.0, 1.0], 0.8).unwrap(),
        ),
        Subject::GpEuclid => (
            vec!["gp-euclid", "--n", "4", "--p", "2.5", "--r", "1", "--t", "0.8"],
            gp_euclid(&PFlowParams::euclidean(4, 2.5).unwrap(), 1.0, 0.8).unwrap(),
        ),
        Subject::GpHeis => (
            vec!["gp-heis", "--n", "1", "--p", "3", "--r", "1", "--s", "0.5", "--t", "0.8"],
            gp_heisenberg(&PFlowParams::heisenberg(1, 3.0).unwrap(), &pt, &q).unwrap().value,
        ),
        Subject::EnergyNum => (
            vec!["energy-num", "--alpha", "1.7", "--k", "2", "--r", "1", "--s", "0.5"],
            energy_numeric(1.7, 2, 1.0, 0.5, &q).unwrap().value,
        ),
        Subject::EnergyClosed => (
            vec!["energy-closed", "--alpha", "1.7", "--k", "2", "--r", "1", "--s", "0.5", "--variant", "meh"],
            energy_closed(1.7, 2, 1.0, 0.5, EnergyConstant::Mehler).unwrap(),
        ),
    }
}
