use std::sync::OnceLock;

use fractal_mehler::verify::{
    anchor_description, run, run_suite, Selection, Suite, Tolerances, VerificationReport, VerifyConfig, ANCHORS,
    CSV_HEADER,
};

fn full_report() -> &'static VerificationReport {
    static REPORT: OnceLock<VerificationReport> = OnceLock::new();
    REPORT.get_or_init(|| run(Selection::All, &VerifyConfig::default()).unwrap())
}

#[test]
fn every_suite_passes_with_defaults() {
    let report = full_report();
    let failures: Vec<_> = report.failures().map(|r| (&r.id, r.rel_err, r.tol, &r.note)).collect();
    assert!(report.passed, "{failures:#?}");
    assert_eq!(report.suites.len(), Suite::ALL.len());
    for s in &report.suites {
        assert!(s.checks > 0, "{} has no checks", s.suite);
        assert_eq!(s.checks, s.passed + s.failed);
    }
}

#[test]
fn every_anchor_is_registered() {
    for rec in &full_report().records {
        assert!(
            anchor_description(&rec.anchor).is_some(),
            "{} uses unregistered anchor {:?}",
            rec.id,
            rec.anchor
        );
    }
    let used: std::collections::BTreeSet<_> = full_report().records.iter().map(|r| r.anchor.as_str()).collect();
    for (name, _) in ANCHORS {
        assert!(used.contains(name), "anchor {name} is registered but never checked");
    }
}

#[test]
fn records_are_sorted_and_pass_flags_consistent() {
    let recs = &full_report().records;
    assert!(recs.windows(2).all(|w| (w[0].suite, &w[0].id) < (w[1].suite, &w[1].id)));
    for r in recs {
        assert_eq!(r.passed, r.rel_err <= r.tol, "{}", r.id);
    }
}

#[test]
fn adjudication_is_reported() {
    let adj = full_report().adjudication.as_ref().expect("conformal suite adjudicates");
    assert!(["thm_gen", "meh_Cmk", "none"].contains(&adj.matched_constant.as_str()));
    assert_eq!(adj.matched_constant, "thm_gen", "ratio {}", adj.ratio);
    assert!((adj.ratio - 1.0).abs() <= 1e-4);
    assert!((adj.reference.ratio_meh - 0.25).abs() <= 1e-4);
}

#[test]
fn same_seed_gives_identical_json() {
    let cfg = VerifyConfig::default();
    for suite in [Suite::Identities, Suite::Homogeneity, Suite::Pde] {
        let a = run_suite(suite, &cfg).unwrap().to_json_reproducible().unwrap();
        let b = run_suite(suite, &cfg).unwrap().to_json_reproducible().unwrap();
        assert_eq!(a, b, "{suite}");
    }
}

#[test]
fn seed_changes_the_draws() {
    let a = run_suite(Suite::Identities, &VerifyConfig::default()).unwrap();
    let b = run_suite(Suite::Identities, &VerifyConfig { seed: 7, ..VerifyConfig::default() }).unwrap();
    assert!(b.passed);
    assert_ne!(a.to_json_reproducible().unwrap(), b.to_json_reproducible().unwrap());
}

#[test]
fn csv_has_fixed_header_and_one_row_per_record() {
    let report = run_suite(Suite::Homogeneity, &VerifyConfig::default()).unwrap();
    let csv = report.to_csv().unwrap();
    let mut reader = csv::Reader::from_reader(csv.as_bytes());
    let header: Vec<_> = reader.headers().unwrap().iter().map(str::to_string).collect();
    assert_eq!(header, CSV_HEADER);
    assert_eq!(reader.records().count(), report.records.len());
}

#[test]
fn json_round_trips() {
    let report = run_suite(Suite::Limit, &VerifyConfig::default()).unwrap();
    let back: VerificationReport = serde_json::from_str(&report.to_json().unwrap()).unwrap();
    assert_eq!(back, report);
}

#[test]
fn tolerances_come_from_configuration() {
    let mut cfg = VerifyConfig::default();
    cfg.tolerances.set_primary(Suite::Homogeneity, 1e-30);
    let report = run_suite(Suite::Homogeneity, &cfg).unwrap();
    assert!(report.records.iter().all(|r| r.tol == 1e-30));
    assert!(!report.passed);
}

#[test]
fn config_rejects_unknown_keys() {
    assert!(serde_json::from_str::<VerifyConfig>(r#"{"seed": 1, "sampels": 3}"#).is_err());
    assert!(serde_json::from_str::<Tolerances>(r#"{"identitis": 1e-8}"#).is_err());
    let cfg: VerifyConfig = serde_json::from_str(r#"{"seed": 3, "tolerances": {"identities": 1e-7}}"#).unwrap();
    assert_eq!(cfg.seed, 3);
    assert_eq!(cfg.tolerances.identities, 1e-7);
    assert_eq!(cfg.samples, VerifyConfig::default().samples);
}

#[test]
fn invalid_config_is_an_error_not_a_failed_report() {
    let cfg = VerifyConfig { samples: 0, ..VerifyConfig::default() };
    assert!(run_suite(Suite::Identities, &cfg).is_err());
    let mut cfg = VerifyConfig::default();
    cfg.tolerances.cauchy_mass = -1.0;
    assert!(run(Selection::All, &cfg).is_err());
}

#[test]
fn selection_parsing() {
    assert_eq!("all".parse::<Selection>().unwrap(), Selection::All);
    for s in Suite::ALL {
        assert_eq!(s.name().parse::<Selection>().unwrap(), Selection::One(s));
    }
    assert!("everything".parse::<Selection>().is_err());
}
