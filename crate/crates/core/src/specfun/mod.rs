//! Special functions used by the kernels and the identity checks.
//!
//! All functions are pure and thread-safe.

mod bessel_i;
mod bessel_j;
mod gamma;
mod hyp2f1;
mod sphere;

pub use bessel_i::{bessel_i_scaled, bessel_i_scaled_result, ln_bessel_i_scaled, I_SERIES_SWITCH};
pub use bessel_j::{bessel_j, bessel_j_normalized, J_ASYMPTOTIC_SWITCH, J_SERIES_SWITCH};
pub use gamma::{gamma, ln_gamma, rgamma, GAMMA_ARG_LIMIT};
pub use hyp2f1::{hyp2f1, hyp2f1_result, hyp2f1_series, HYP2F1_U_MAX};
pub use sphere::{ln_sphere_exp_integral, sphere_exp_integral};

use serde::{Deserialize, Serialize};

/// A special-function value with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpecFunResult {
    pub value: f64,
    /// Finite and non-negative whenever `value` is finite.
    pub abs_error_estimate: f64,
    /// Set when the unscaled quantity is below the smallest normal `f64`.
    pub underflow_flag: bool,
}
