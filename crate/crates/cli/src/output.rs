//! Rendering and writing results.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use fractal_mehler::verify::VerificationReport;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::subject::Evaluation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Plain,
}

fn json<T: Serialize>(value: &T) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Io(e.into()))?;
    s.push('\n');
    Ok(s)
}

fn fmt_opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Fixed columns following the input columns of a table.
pub const VALUE_COLUMNS: [&str; 5] = ["value", "err_estimate", "n_evals", "converged", "gauge_scaled"];

/// Rows as CSV: one column per input name (sorted), then [`VALUE_COLUMNS`].
pub fn csv_rows(rows: &[Evaluation]) -> CliResult<String> {
    let names: BTreeSet<&str> = rows.iter().flat_map(|r| r.inputs.keys().map(String::as_str)).collect();
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| CliError::Io(std::io::Error::other(e));
    let header: Vec<&str> = std::iter::once("subject").chain(names.iter().copied()).chain(VALUE_COLUMNS).collect();
    w.write_record(&header).map_err(csv_err)?;
    for r in rows {
        let mut rec = vec![r.subject.name().to_string()];
        rec.extend(names.iter().map(|n| fmt_opt(r.inputs.get(*n))));
        rec.push(r.value.to_string());
        rec.push(fmt_opt(r.err_estimate));
        rec.push(fmt_opt(r.n_evals));
        rec.push(fmt_opt(r.converged));
        rec.push(fmt_opt(r.gauge_scaled));
        w.write_record(&rec).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(std::io::Error::other(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn plain_row(r: &Evaluation) -> String {
    let mut s = r.value.to_string();
    if let Some(e) = r.err_estimate {
        s += &format!(" ± {e:.2e}");
    }
    if r.converged == Some(false) {
        s += " (not converged)";
    }
    if let Some(g) = r.gauge_scaled {
        s += &format!("  [value·N^(2α+2k−2) = {g}]");
    }
    s
}

pub fn render_eval(ev: &Evaluation, format: Format) -> CliResult<String> {
    match format {
        Format::Json => json(ev),
        Format::Csv => csv_rows(std::slice::from_ref(ev)),
        Format::Plain => Ok(plain_row(ev) + "\n"),
    }
}

pub fn render_table(rows: &[Evaluation], format: Format) -> CliResult<String> {
    match format {
        Format::Json => json(&rows),
        Format::Csv => csv_rows(rows),
        Format::Plain => Ok(rows
            .iter()
            .map(|r| {
                let inputs: Vec<_> = r.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
                format!("{}  {}\n", inputs.join(" "), plain_row(r))
            })
            .collect()),
    }
}

pub fn render_report(report: &VerificationReport, format: Format) -> CliResult<String> {
    let r = match format {
        Format::Json => report.to_json().map(|s| s + "\n"),
        Format::Csv => report.to_csv(),
        Format::Plain => Ok(report.to_plain()),
    };
    r.map_err(CliError::from)
}

/// Write `text` to `out`, or atomically replace the file at `path`.
pub fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> CliResult<()> {
    let Some(path) = path else {
        out.write_all(text.as_bytes())?;
        return Ok(());
    };
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().ok_or_else(|| CliError::Usage(format!("--out {} is not a file path", path.display())))?;
    let tmp = dir.join(format!(".{}.{}.tmp", name.to_string_lossy(), std::process::id()));
    std::fs::write(&tmp, text)?;
    if let Err(e) = std::fs::rename(&tmp, path) {
        let _ = std::fs::remove_file(&tmp);
        return Err(e.into());
    }
    Ok(())
}
