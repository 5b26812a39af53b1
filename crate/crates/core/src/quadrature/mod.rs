//! One-dimensional adaptive quadrature.
//!
//! Everything is built on a 15-point Gauss–Kronrod panel with global
//! adaptive bisection. On top of that sit a semi-infinite driver, the radial
//! Fourier (Bochner) reduction and a time-profile integrator for `∫_0^∞ g(t) dt`.
//!
//! Integrands come in two flavours: plain `Fn(f64) -> f64` for the public
//! convenience entry points, and fallible `FnMut(f64) -> Result<f64>` (the
//! `try_` variants) for nested use where the integrand itself may fail.

mod adaptive;
mod bochner;
mod gk;
mod semi;
mod time_profile;

pub use adaptive::{integrate_adaptive, try_integrate_adaptive, try_integrate_breakpoints};
pub use bochner::{bochner_radial_ft, try_bochner_radial_ft, try_bochner_radial_ft_truncated};
pub use semi::{integrate_semiinfinite, try_integrate_semiinfinite, Decay};
pub use time_profile::{integrate_time_profile, try_integrate_time_profile};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Smallest relative tolerance accepted; anything tighter is below what
/// double precision can deliver.
pub const MIN_REL_TOL: f64 = 1e-14;
/// Hard cap on the number of panels.
pub const MAX_SUBDIVISIONS_LIMIT: usize = 1_000_000;

/// Tolerances and limits for every integrator in this module.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct QuadConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    /// A semi-infinite integral stops doubling once the last panel
    /// contributes less than this fraction of the running value.
    pub truncation_tail_bound: f64,
    /// Overrides the split point `t*` used by the energy integrals
    /// (default `N(r, s)² / 4`).
    pub time_split: Option<f64>,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig {
            rel_tol: 1e-10,
            abs_tol: 0.0,
            max_subdivisions: 20_000,
            truncation_tail_bound: 1e-15,
            time_split: None,
        }
    }
}

impl QuadConfig {
    /// Build and validate a configuration with no `t*` override.
    pub fn new(
        rel_tol: f64,
        abs_tol: f64,
        max_subdivisions: usize,
        truncation_tail_bound: f64,
    ) -> Result<Self> {
        let cfg = QuadConfig {
            rel_tol,
            abs_tol,
            max_subdivisions,
            truncation_tail_bound,
            time_split: None,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Same configuration with a different relative tolerance.
    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    /// Same configuration with a different absolute tolerance.
    pub fn with_abs_tol(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol >= MIN_REL_TOL) || !self.rel_tol.is_finite() {
            return Err(Error::Config(format!(
                "rel_tol must be a finite number >= {MIN_REL_TOL:e}, got {}",
                self.rel_tol
            )));
        }
        if !(self.abs_tol >= 0.0) || !self.abs_tol.is_finite() {
            return Err(Error::Config(format!(
                "abs_tol must be finite and >= 0, got {}",
                self.abs_tol
            )));
        }
        if self.max_subdivisions == 0 || self.max_subdivisions > MAX_SUBDIVISIONS_LIMIT {
            return Err(Error::Config(format!(
                "max_subdivisions must lie in 1..={MAX_SUBDIVISIONS_LIMIT}, got {}",
                self.max_subdivisions
            )));
        }
        if !(self.truncation_tail_bound > 0.0) || !self.truncation_tail_bound.is_finite() {
            return Err(Error::Config(format!(
                "truncation_tail_bound must be finite and > 0, got {}",
                self.truncation_tail_bound
            )));
        }
        if let Some(ts) = self.time_split {
            if !(ts > 0.0) || !ts.is_finite() {
                return Err(Error::Config(format!("time_split must be > 0, got {ts}")));
            }
        }
        Ok(())
    }

    /// `max(abs_tol, rel_tol·|value|)`.
    pub fn tolerance_for(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

/// Outcome of an integration.
///
/// `converged` implies `err_estimate <= max(abs_tol, rel_tol·|value|)` for the
/// configuration that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: f64,
    pub err_estimate: f64,
    pub n_evals: u64,
    pub converged: bool,
    /// Truncation point used by a semi-infinite driver, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<f64>,
}

/// Headroom over an unconverged error estimate before a value is trusted.
const NOISE_FACTOR: f64 = 8.0;

impl EvalResult {
    /// A value known exactly.
    pub fn exact(value: f64) -> Self {
        EvalResult {
            value,
            err_estimate: 0.0,
            n_evals: 0,
            converged: true,
            cutoff: None,
        }
    }

    /// The value, or zero when the result did not converge and the value is
    /// not clearly above its error estimate.
    ///
    /// Unconverged oscillatory integrals that are exponentially small come
    /// back as cancellation noise; outer integrals over such results should
    /// see zero rather than noise amplified by a prefactor.
    pub fn denoised(&self) -> f64 {
        if !self.converged && self.value.abs() <= NOISE_FACTOR * self.err_estimate {
            0.0
        } else {
            self.value
        }
    }

    /// Multiply value and error by a constant.
    pub fn scaled(mut self, factor: f64) -> Self {
        self.value *= factor;
        self.err_estimate *= factor.abs();
        self
    }

    /// Sum of two results; convergence is the conjunction.
    pub fn plus(self, other: EvalResult) -> Self {
        EvalResult {
            value: self.value + other.value,
            err_estimate: self.err_estimate + other.err_estimate,
            n_evals: self.n_evals + other.n_evals,
            converged: self.converged && other.converged,
            cutoff: match (self.cutoff, other.cutoff) {
                (Some(a), Some(b)) => Some(a.max(b)),
                (a, b) => a.or(b),
            },
        }
    }

    /// Re-derive the convergence flag against `cfg` (used after summing
    /// pieces that were each integrated separately).
    pub(crate) fn recheck(mut self, cfg: &QuadConfig) -> Self {
        self.converged = self.converged && self.err_estimate <= cfg.tolerance_for(self.value);
        self
    }
}

/// Adaptive outcome together with the `∫|f|` estimate.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Outcome {
    pub result: EvalResult,
    pub abs_value: f64,
}
