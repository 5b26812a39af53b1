use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::Suite;
use crate::Result;

/// Below this magnitude of the reference value the comparison is absolute.
pub(crate) const ABSOLUTE_FALLBACK: f64 = 1e-12;

/// One comparison `lhs ≈ rhs`.
///
/// `rel_err` is `|lhs − rhs| / |rhs|`, or `|lhs − rhs|` when
/// `|rhs| < 1e−12`; `passed` is `rel_err ≤ tol`. Bounds of the form
/// `|x| ≤ tol` are stored with `rhs = 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub suite: Suite,
    pub id: String,
    pub anchor: String,
    pub inputs: BTreeMap<String, f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub rel_err: f64,
    pub tol: f64,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckRecord {
    pub fn new(
        suite: Suite,
        id: impl Into<String>,
        anchor: &str,
        inputs: BTreeMap<String, f64>,
        lhs: f64,
        rhs: f64,
        tol: f64,
    ) -> Self {
        let diff = (lhs - rhs).abs();
        let rel_err = if rhs.abs() < ABSOLUTE_FALLBACK { diff } else { diff / rhs.abs() };
        CheckRecord {
            suite,
            id: id.into(),
            anchor: anchor.to_string(),
            inputs,
            lhs,
            rhs,
            rel_err,
            tol,
            passed: rel_err <= tol,
            note: None,
        }
    }
}

/// Parameter record from name/value pairs.
pub(crate) fn inputs(pairs: &[(&str, f64)]) -> BTreeMap<String, f64> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

/// Collects the records of one suite.
pub(crate) struct Recorder {
    suite: Suite,
    records: Vec<CheckRecord>,
}

impl Recorder {
    pub(crate) fn new(suite: Suite) -> Self {
        Recorder {
            suite,
            records: Vec::new(),
        }
    }

    /// Record `lhs ≈ rhs`, or a failed check carrying the error message.
    pub(crate) fn compare(
        &mut self,
        id: impl Into<String>,
        anchor: &str,
        inputs: BTreeMap<String, f64>,
        tol: f64,
        eval: impl FnOnce() -> Result<(f64, f64)>,
    ) {
        let id = id.into();
        let rec = match eval() {
            Ok((lhs, rhs)) => CheckRecord::new(self.suite, id, anchor, inputs, lhs, rhs, tol),
            Err(e) => {
                let mut r = CheckRecord::new(self.suite, id, anchor, inputs, f64::NAN, f64::NAN, tol);
                r.note = Some(e.to_string());
                r
            }
        };
        self.records.push(rec);
    }

    /// Record `|value| ≤ tol`.
    pub(crate) fn bound(
        &mut self,
        id: impl Into<String>,
        anchor: &str,
        inputs: BTreeMap<String, f64>,
        tol: f64,
        eval: impl FnOnce() -> Result<f64>,
    ) {
        self.compare(id, anchor, inputs, tol, || eval().map(|v| (v, 0.0)));
    }

    /// Attach a note to the most recent record.
    pub(crate) fn note(&mut self, text: impl Into<String>) {
        if let Some(r) = self.records.last_mut() {
            if r.note.is_none() {
                r.note = Some(text.into());
            }
        }
    }

    pub(crate) fn finish(mut self) -> Vec<CheckRecord> {
        self.records.sort_by(|a, b| a.id.cmp(&b.id));
        self.records
    }
}

/// Number of steps in `seq` that fail to decrease strictly.
pub(crate) fn non_decreasing_steps(seq: &[f64]) -> f64 {
    seq.windows(2).filter(|w| !(w[1] < w[0])).count() as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_iff_within_tolerance() {
        let r = CheckRecord::new(Suite::Pde, "a", "x", BTreeMap::new(), 1.0 + 1e-9, 1.0, 1e-8);
        assert!(r.passed);
        let r = CheckRecord::new(Suite::Pde, "a", "x", BTreeMap::new(), 1.0 + 1e-7, 1.0, 1e-8);
        assert!(!r.passed);
    }

    #[test]
    fn absolute_fallback_near_zero() {
        let r = CheckRecord::new(Suite::Pde, "a", "x", BTreeMap::new(), 3e-11, 1e-13, 1e-10);
        assert!(r.passed);
        assert!((r.rel_err - (3e-11 - 1e-13)).abs() < 1e-20);
    }

    #[test]
    fn nan_fails() {
        let r = CheckRecord::new(Suite::Pde, "a", "x", BTreeMap::new(), f64::NAN, 1.0, 1.0);
        assert!(!r.passed);
    }

    #[test]
    fn errors_become_failed_records() {
        let mut rec = Recorder::new(Suite::Limit);
        rec.compare("b", "x", BTreeMap::new(), 1.0, || Err(crate::Error::Config("boom".into())));
        rec.bound("a", "x", BTreeMap::new(), 1.0, || Ok(0.5));
        let out = rec.finish();
        assert_eq!(out[0].id, "a");
        assert!(out[0].passed);
        assert!(!out[1].passed);
        assert!(out[1].note.as_deref().unwrap().contains("boom"));
    }

    #[test]
    fn counts_non_decreasing_steps() {
        assert_eq!(non_decreasing_steps(&[4.0, 3.0, 2.0]), 0.0);
        assert_eq!(non_decreasing_steps(&[4.0, 4.0, 5.0, 1.0]), 2.0);
    }
}
