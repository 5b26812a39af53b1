use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{CheckRecord, Suite, VerifyConfig};
use crate::{Error, Result};

/// Header row of [`VerificationReport::to_csv`].
pub const CSV_HEADER: [&str; 10] = [
    "suite", "id", "anchor", "inputs", "lhs", "rhs", "rel_err", "tol", "passed", "note",
];

/// Pass/fail counts of one suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub suite: Suite,
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
}

/// Ratio of the numeric energy to each printed closed-form constant at one
/// `(α, k)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdjudicationCase {
    pub alpha: f64,
    pub k: u32,
    pub r: f64,
    pub s: f64,
    /// numeric / closed form with the conformal-theorem constant.
    pub ratio_thm: f64,
    /// numeric / closed form with the Mehler-formula constant `C(2α, k)`.
    pub ratio_meh: f64,
}

/// Which printed energy constant the quadrature supports.
///
/// `ratio` is numeric / theorem-constant closed form at the reference case.
/// `matched_constant` is `"thm_gen"` when the ratio is 1, `"meh_Cmk"` when it
/// is 4 (the Mehler constant is four times larger), `"none"` otherwise.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Adjudication {
    pub matched_constant: String,
    pub ratio: f64,
    pub reference: AdjudicationCase,
    pub cases: Vec<AdjudicationCase>,
}

/// Result of a verification run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub suites: Vec<SuiteSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub adjudication: Option<Adjudication>,
    pub config: VerifyConfig,
    pub records: Vec<CheckRecord>,
    /// Wall time in seconds per suite. The only non-reproducible field.
    pub timings: BTreeMap<String, f64>,
}

impl VerificationReport {
    pub(crate) fn new(cfg: &VerifyConfig) -> Self {
        VerificationReport {
            passed: true,
            suites: Vec::new(),
            adjudication: None,
            config: cfg.clone(),
            records: Vec::new(),
            timings: BTreeMap::new(),
        }
    }

    pub(crate) fn add_suite(&mut self, suite: Suite, records: Vec<CheckRecord>, seconds: f64) {
        let passed = records.iter().filter(|r| r.passed).count();
        self.suites.push(SuiteSummary {
            suite,
            checks: records.len(),
            passed,
            failed: records.len() - passed,
        });
        self.records.extend(records);
        self.timings.insert(suite.name().to_string(), seconds);
    }

    pub(crate) fn finalize(&mut self) {
        self.suites.sort_by_key(|s| s.suite);
        self.records.sort_by(|a, b| (a.suite, &a.id).cmp(&(b.suite, &b.id)));
        self.passed = self.suites.iter().all(|s| s.failed == 0);
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.passed)
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Config(e.to_string()))
    }

    /// JSON with the timings removed, byte-identical across runs with the
    /// same configuration.
    pub fn to_json_reproducible(&self) -> Result<String> {
        let mut copy = self.clone();
        copy.timings.clear();
        copy.to_json()
    }

    /// One row per record under [`CSV_HEADER`]; inputs are `name=value`
    /// pairs joined by `;`.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let err = |e: csv::Error| Error::Config(e.to_string());
        w.write_record(CSV_HEADER).map_err(err)?;
        for r in &self.records {
            let inputs: Vec<String> = r.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
            w.write_record([
                r.suite.name().to_string(),
                r.id.clone(),
                r.anchor.clone(),
                inputs.join(";"),
                r.lhs.to_string(),
                r.rhs.to_string(),
                r.rel_err.to_string(),
                r.tol.to_string(),
                r.passed.to_string(),
                r.note.clone().unwrap_or_default(),
            ])
            .map_err(err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Config(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Config(e.to_string()))
    }

    /// Human-readable summary: one line per suite, then failures.
    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            out.push_str(&format!(
                "{:<12} {:>4} checks  {:>4} passed  {:>4} failed\n",
                s.suite.name(),
                s.checks,
                s.passed,
                s.failed
            ));
        }
        if let Some(a) = &self.adjudication {
            out.push_str(&format!(
                "energy constant: matched {} (ratio to theorem constant {:.12})\n",
                a.matched_constant, a.ratio
            ));
        }
        for r in self.failures() {
            out.push_str(&format!(
                "FAIL {}/{} [{}] lhs={:e} rhs={:e} err={:e} tol={:e}{}\n",
                r.suite.name(),
                r.id,
                r.anchor,
                r.lhs,
                r.rhs,
                r.rel_err,
                r.tol,
                r.note.as_deref().map(|n| format!(" ({n})")).unwrap_or_default()
            ));
        }
        out.push_str(if self.passed { "PASS\n" } else { "FAIL\n" });
        out
    }
}
