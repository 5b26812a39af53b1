//! Kernel evaluations.
//!
//! Every `ℝ^k` Fourier integral is radial in `λ`, so each kernel is computed
//! as a one-dimensional Bochner transform of a log-space integrand. The
//! `λ → 0` limits are supplied analytically.

mod cauchy;
mod energy;
mod kernel_k;
mod mehler;
mod ou;
mod params;
mod pflow;

pub(crate) mod logfun;

pub use cauchy::{cauchy_solve_k1, try_cauchy_solve_k1};
pub use energy::{energy_closed, energy_constant, energy_numeric, EnergyConstant};
pub use kernel_k::{
    bessel_heat_kernel, dominating_bound, hat_propagator, kernel_k_integrand, mehler_kernel_k,
    MAX_GAUSSIAN_EXPONENT,
};
pub use mehler::{gauge, gh_kernel, kernel_k_at_pole, mehler_g, pole_prefactor};
pub use ou::{ou_evolve_1d, ou_mehler_kernel};
pub use params::{Geometry, KernelParams, PFlowParams, RadialPoint};
pub use pflow::{
    gp_euclid, gp_euclid_energy, gp_euclid_energy_constant, gp_heisenberg, gp_heisenberg_direct,
    gp_heisenberg_energy_closed, gp_heisenberg_energy_constant, gp_heisenberg_energy_numeric,
};

/// `ln(10^{-18})`: integrands are truncated where they fall this far below
/// their peak.
pub(crate) const LN_TRUNCATION: f64 = -41.446_531_673_892_82;

/// Find `Λ` where `ell(λ) + (k-1)·ln λ` has dropped [`LN_TRUNCATION`] below
/// its running maximum. `ell` is the log of the integrand normalised to
/// `ell(0) = 0`.
pub(crate) fn radial_cutoff<F>(mut ell: F, k: u32) -> crate::Result<f64>
where
    F: FnMut(f64) -> crate::Result<f64>,
{
    let km1 = (k - 1) as f64;
    let mut lam = 1.0 / 64.0;
    let mut peak = if k == 1 { 0.0 } else { f64::NEG_INFINITY };
    loop {
        let g = ell(lam)? + km1 * lam.ln();
        peak = peak.max(g);
        if g < peak + LN_TRUNCATION {
            return Ok(lam);
        }
        lam *= 1.25;
        if lam > 1e4 {
            return Err(crate::error::domain(
                "radial_cutoff",
                "integrand does not decay within λ ≤ 1e4",
            ));
        }
    }
}
