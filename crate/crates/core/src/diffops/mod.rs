//! Central-difference residuals of the differential operators.
//!
//! Every operator is applied by second-order central differences. Evaluation
//! points must stay at least two steps away from the `r = 0` and `s = 0` axes;
//! there are no one-sided stencils.

mod grushin;
mod ou;
mod pflow;

pub use grushin::{bessel_apply, grushin_residual, neumann_probes, neumann_trace};
pub use ou::{ou_residual, riccati_check, RiccatiResiduals};
pub use pflow::pflow_radial_residual;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Finite-difference scheme. Only second-order central differences exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scheme {
    #[default]
    Central2,
}

/// Grid steps in `r`, `s` and `t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StencilConfig {
    pub h_r: f64,
    pub h_s: f64,
    pub h_t: f64,
    #[serde(default)]
    pub scheme: Scheme,
}

impl StencilConfig {
    pub fn new(h_r: f64, h_s: f64, h_t: f64) -> Result<Self> {
        let cfg = StencilConfig {
            h_r,
            h_s,
            h_t,
            scheme: Scheme::Central2,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// The same step in every direction.
    pub fn uniform(h: f64) -> Result<Self> {
        Self::new(h, h, h)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, h) in [("h_r", self.h_r), ("h_s", self.h_s), ("h_t", self.h_t)] {
            if !(h > 0.0 && h.is_finite()) {
                return Err(Error::Config(format!("{name} must be positive and finite, got {h}")));
            }
        }
        Ok(())
    }

    /// All steps halved.
    pub fn halved(&self) -> Self {
        StencilConfig {
            h_r: 0.5 * self.h_r,
            h_s: 0.5 * self.h_s,
            h_t: 0.5 * self.h_t,
            scheme: self.scheme,
        }
    }
}

/// Observed convergence orders `log2(|R(h)| / |R(h/2)|)` of a sequence of
/// residuals computed under successive step halvings.
pub fn observed_orders(residuals: &[f64]) -> Vec<f64> {
    residuals
        .windows(2)
        .map(|w| (w[0].abs() / w[1].abs()).log2())
        .collect()
}

/// Residuals of `residual(cfg)` at `levels` successive halvings of `start`,
/// with the observed orders between them.
pub fn richardson<F>(mut residual: F, start: &StencilConfig, levels: usize) -> Result<(Vec<f64>, Vec<f64>)>
where
    F: FnMut(&StencilConfig) -> Result<f64>,
{
    let mut cfg = *start;
    let mut values = Vec::with_capacity(levels);
    for _ in 0..levels {
        values.push(residual(&cfg)?);
        cfg = cfg.halved();
    }
    let orders = observed_orders(&values);
    Ok((values, orders))
}

/// Require `x > 2h` for a stencil centred at `x`.
pub(crate) fn clear_of_axis(x: f64, h: f64) -> Result<()> {
    if x > 2.0 * h {
        Ok(())
    } else {
        Err(Error::StepTooLarge { at: x, h })
    }
}

/// `(f(x+h) − f(x−h)) / 2h` and `(f(x+h) − 2f(x) + f(x−h)) / h²` from the
/// three samples.
pub(crate) fn central(fm: f64, f0: f64, fp: f64, h: f64) -> (f64, f64) {
    ((fp - fm) / (2.0 * h), (fp - 2.0 * f0 + fm) / (h * h))
}
