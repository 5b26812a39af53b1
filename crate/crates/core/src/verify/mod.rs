//! Identity suites producing reproducible pass/fail reports.
//!
//! Each suite returns [`CheckRecord`]s; evaluation errors inside a check are
//! recorded as failed checks, never propagated. Records are sorted by suite
//! and check id, so a fixed seed and configuration give byte-identical JSON
//! once the `timings` field is dropped.

mod anchors;
mod cauchy;
mod conformal;
mod homogeneity;
mod identities;
mod limit;
mod pde;
mod pflow;
mod record;
mod report;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::quadrature::QuadConfig;
use crate::{Error, Result};

pub use anchors::{anchor_description, ANCHORS};
pub use conformal::{default_conformal_grid, ConformalPoint};
pub use record::CheckRecord;
pub use report::{Adjudication, AdjudicationCase, SuiteSummary, VerificationReport, CSV_HEADER};

/// The verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Identities,
    Homogeneity,
    Conformal,
    Limit,
    Pde,
    Cauchy,
    Pflow,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Identities,
        Suite::Homogeneity,
        Suite::Conformal,
        Suite::Limit,
        Suite::Pde,
        Suite::Cauchy,
        Suite::Pflow,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Homogeneity => "homogeneity",
            Suite::Conformal => "conformal",
            Suite::Limit => "limit",
            Suite::Pde => "pde",
            Suite::Cauchy => "cauchy",
            Suite::Pflow => "pflow",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown suite {s:?}")))
    }
}

/// A suite name or `all`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    One(Suite),
    All,
}

impl Selection {
    pub fn suites(self) -> Vec<Suite> {
        match self {
            Selection::One(s) => vec![s],
            Selection::All => Suite::ALL.to_vec(),
        }
    }
}

impl FromStr for Selection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "all" {
            Ok(Selection::All)
        } else {
            s.parse().map(Selection::One)
        }
    }
}

/// Every pass/fail threshold used by the suites.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Tolerances {
    /// Relative error of the classical identities.
    pub identities: f64,
    /// Gegenbauer draws with `ν` below [`Tolerances::gegenbauer_edge_nu`].
    pub gegenbauer_edge: f64,
    pub gegenbauer_edge_nu: f64,
    pub homogeneity: f64,
    /// Relative spread of `energy · N^{2α+2k−2}` across a grid.
    pub conformal_spread: f64,
    /// Same, for grids containing `r = 0` points.
    pub conformal_spread_axis: f64,
    /// Distance of the measured constant ratio from 1 or 4.
    pub adjudication: f64,
    pub pole_gap: f64,
    /// Allowed deviation of an observed convergence order from 2.
    pub order_deviation: f64,
    pub grushin_residual: f64,
    pub caloric: f64,
    pub neumann_final: f64,
    pub neumann_control: f64,
    pub ou_residual: f64,
    pub ou_heat_limit: f64,
    pub riccati_min_order: f64,
    pub lemma_identity: f64,
    /// `|u(t) − φ| / ‖φ‖_∞` at the smallest time.
    pub cauchy_recovery: f64,
    pub cauchy_mass: f64,
    pub semigroup: f64,
    pub pflow_residual: f64,
    pub pflow_energy: f64,
    pub heisenberg_paths: f64,
    pub heisenberg_spread: f64,
    /// Agreement of the numeric Heisenberg energy with the derived constant.
    pub heisenberg_constant: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            identities: 1e-8,
            gegenbauer_edge: 1e-6,
            gegenbauer_edge_nu: -0.3,
            homogeneity: 1e-9,
            conformal_spread: 1e-5,
            conformal_spread_axis: 1e-4,
            adjudication: 1e-4,
            pole_gap: 1e-3,
            order_deviation: 0.15,
            grushin_residual: 1e-5,
            caloric: 1e-10,
            neumann_final: 1e-4,
            neumann_control: 1e-6,
            ou_residual: 1e-5,
            ou_heat_limit: 1e-6,
            riccati_min_order: 1.9,
            lemma_identity: 1e-4,
            cauchy_recovery: 1e-2,
            cauchy_mass: 1e-4,
            semigroup: 1e-3,
            pflow_residual: 1e-6,
            pflow_energy: 1e-8,
            heisenberg_paths: 1e-8,
            heisenberg_spread: 1e-4,
            heisenberg_constant: 1e-6,
        }
    }
}

impl Tolerances {
    /// Override the headline tolerance of `suite`.
    pub fn set_primary(&mut self, suite: Suite, tol: f64) {
        match suite {
            Suite::Identities => self.identities = tol,
            Suite::Homogeneity => self.homogeneity = tol,
            Suite::Conformal => self.conformal_spread = tol,
            Suite::Limit => self.pole_gap = tol,
            Suite::Pde => self.grushin_residual = tol,
            Suite::Cauchy => self.cauchy_mass = tol,
            Suite::Pflow => self.pflow_residual = tol,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let v = serde_json::to_value(self).map_err(|e| Error::Config(e.to_string()))?;
        for (name, x) in v.as_object().into_iter().flatten() {
            let x = x.as_f64().unwrap_or(f64::NAN);
            if name != "gegenbauer_edge_nu" && !(x >= 0.0) {
                return Err(Error::Config(format!("tolerance {name} must be non-negative, got {x}")));
            }
        }
        Ok(())
    }
}

/// Quadrature settings per workload.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct QuadProfiles {
    /// One-dimensional identity integrals.
    pub identities: QuadConfig,
    /// Single kernel evaluations (homogeneity, pole limit, PDE stencils).
    pub kernels: QuadConfig,
    /// Time integrals of kernels.
    pub energy: QuadConfig,
    /// Nested two-dimensional Cauchy integrals.
    pub cauchy: QuadConfig,
}

impl Default for QuadProfiles {
    fn default() -> Self {
        let base = QuadConfig::default();
        QuadProfiles {
            identities: base.with_rel_tol(1e-12),
            kernels: base.with_rel_tol(1e-12),
            energy: base.with_rel_tol(1e-9),
            cauchy: base.with_rel_tol(1e-6),
        }
    }
}

impl QuadProfiles {
    pub fn validate(&self) -> Result<()> {
        self.identities.validate()?;
        self.kernels.validate()?;
        self.energy.validate()?;
        self.cauchy.validate()
    }
}

/// Everything a verification run depends on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Random draws per classical identity.
    pub samples: usize,
    pub tolerances: Tolerances,
    pub quad: QuadProfiles,
    /// Points of the conformal energy grid; empty means the default grid.
    pub conformal_points: Vec<ConformalPoint>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 20_240_917,
            samples: 50,
            tolerances: Tolerances::default(),
            quad: QuadProfiles::default(),
            conformal_points: Vec::new(),
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::Config("samples must be positive".into()));
        }
        self.tolerances.validate()?;
        self.quad.validate()
    }
}

/// Run one suite.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<VerificationReport> {
    run(Selection::One(suite), cfg)
}

/// Run the selected suites and assemble a report.
pub fn run(selection: Selection, cfg: &VerifyConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    let mut report = VerificationReport::new(cfg);
    for suite in selection.suites() {
        let start = std::time::Instant::now();
        let mut rec = record::Recorder::new(suite);
        match suite {
            Suite::Identities => identities::run(&mut rec, cfg),
            Suite::Homogeneity => homogeneity::run(&mut rec, cfg),
            Suite::Conformal => {
                let adj = conformal::run(&mut rec, cfg);
                report.adjudication = Some(adj);
            }
            Suite::Limit => limit::run(&mut rec, cfg),
            Suite::Pde => pde::run(&mut rec, cfg),
            Suite::Cauchy => cauchy::run(&mut rec, cfg),
            Suite::Pflow => pflow::run(&mut rec, cfg),
        }
        report.add_suite(suite, rec.finish(), start.elapsed().as_secs_f64());
    }
    report.finalize();
    Ok(report)
}
