//! The JSON configuration file.

use std::path::{Path, PathBuf};

use fractal_mehler::quadrature::QuadConfig;
use fractal_mehler::verify::{QuadProfiles, Tolerances, VerifyConfig};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::output::Format;

/// Environment variable naming the config file used when `--config` is absent.
pub const CONFIG_ENV: &str = "FMK_CONFIG";

/// Every key is optional; unknown keys are rejected.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct CliConfig {
    /// Quadrature settings for `eval` and `table`.
    pub quad: QuadConfig,
    /// Default output format; each command has its own when unset.
    pub output_format: Option<Format>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    /// Suite tolerances by name.
    pub tolerances: Tolerances,
    /// Quadrature settings of the verification suites.
    pub verify_quad: QuadProfiles,
}

impl CliConfig {
    pub fn from_json(text: &str) -> CliResult<Self> {
        let cfg: CliConfig = serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        cfg.quad.validate().map_err(|e| CliError::Config(e.to_string()))?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        Self::from_json(&text).map_err(|e| match e {
            CliError::Config(m) => CliError::Config(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    /// `--config` if given, else the file named by [`CONFIG_ENV`], else defaults.
    pub fn resolve(explicit: Option<&Path>) -> CliResult<Self> {
        let path = explicit
            .map(Path::to_path_buf)
            .or_else(|| std::env::var_os(CONFIG_ENV).filter(|v| !v.is_empty()).map(PathBuf::from));
        match path {
            Some(p) => Self::load(&p),
            None => Ok(Self::default()),
        }
    }

    pub fn verify_config(&self) -> VerifyConfig {
        let base = VerifyConfig::default();
        VerifyConfig {
            seed: self.seed.unwrap_or(base.seed),
            samples: self.samples.unwrap_or(base.samples),
            tolerances: self.tolerances.clone(),
            quad: self.verify_quad.clone(),
            conformal_points: base.conformal_points,
        }
    }
}
