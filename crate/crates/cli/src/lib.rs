//! The `fmk` command line: point evaluations, grid tables and verification
//! runs.
//!
//! Exit codes: 0 on success, 1 when an evaluation or a verification check
//! fails, 2 on usage or configuration errors.

pub mod config;
pub mod error;
pub mod grid;
pub mod output;
pub mod subject;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use fractal_mehler::verify::{self, Selection};

use crate::config::CliConfig;
use crate::error::{CliError, CliResult};
use crate::grid::Grid;
use crate::output::{emit, render_eval, render_report, render_table, Format};
use crate::subject::{evaluate, Evaluation, Params, Subject, Variant, GRID_PARAMS};

#[derive(Debug, Parser)]
#[command(name = "fmk", version, about = "Fractal Mehler kernels: evaluation, tables and identity verification")]
pub struct Cli {
    /// JSON configuration file (default: the file named by $FMK_CONFIG).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
#[allow(clippy::large_enum_variant)]
pub enum Command {
    /// Evaluate one subject at one point.
    Eval(EvalArgs),
    /// Run a verification suite, or `all`.
    Verify(VerifyArgs),
    /// Evaluate a subject over a grid of points.
    Table(TableArgs),
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(value_enum)]
    pub subject: Subject,
    #[command(flatten)]
    pub params: Params,
    /// Closed-form constant used by energy-closed.
    #[arg(long, value_enum, default_value_t = Variant::Thm)]
    pub variant: Variant,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_selection(s: &str) -> Result<Selection, String> {
    s.parse().map_err(|e: fractal_mehler::Error| e.to_string())
}

fn parse_tol(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v >= 0.0 => Ok(v),
        _ => Err(format!("{s:?} is not a non-negative tolerance")),
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// identities, homogeneity, conformal, limit, pde, cauchy, pflow or all.
    #[arg(value_parser = parse_selection)]
    pub suite: Selection,
    /// Headline tolerance of the selected suite(s).
    #[arg(long, value_parser = parse_tol)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Random draws per classical identity.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub subject: Subject,
    #[command(flatten)]
    pub params: Params,
    #[arg(long, value_enum, default_value_t = Variant::Thm)]
    pub variant: Variant,
    #[arg(long = "alpha-grid", value_name = "START:STOP:COUNT", allow_hyphen_values = true)]
    pub alpha_grid: Option<Grid>,
    #[arg(long = "beta-grid", value_name = "START:STOP:COUNT", allow_hyphen_values = true)]
    pub beta_grid: Option<Grid>,
    #[arg(long = "p-grid", value_name = "START:STOP:COUNT", allow_hyphen_values = true)]
    pub p_grid: Option<Grid>,
    #[arg(long = "r-grid", value_name = "START:STOP:COUNT", allow_hyphen_values = true)]
    pub r_grid: Option<Grid>,
    #[arg(long = "s-grid", value_name = "START:STOP:COUNT", allow_hyphen_values = true)]
    pub s_grid: Option<Grid>,
    #[arg(long = "t-grid", value_name = "START:STOP:COUNT", allow_hyphen_values = true)]
    pub t_grid: Option<Grid>,
    #[arg(long = "rho-grid", value_name = "START:STOP:COUNT", allow_hyphen_values = true)]
    pub rho_grid: Option<Grid>,
    #[arg(long = "omega-grid", value_name = "START:STOP:COUNT", allow_hyphen_values = true)]
    pub omega_grid: Option<Grid>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl TableArgs {
    fn grids(&self) -> Vec<(&'static str, Grid)> {
        let all = [
            self.alpha_grid,
            self.beta_grid,
            self.p_grid,
            self.r_grid,
            self.s_grid,
            self.t_grid,
            self.rho_grid,
            self.omega_grid,
        ];
        GRID_PARAMS.into_iter().zip(all).filter_map(|(n, g)| g.map(|g| (n, g))).collect()
    }
}

fn eval_cmd(a: &EvalArgs, cfg: &CliConfig, out: &mut dyn Write) -> CliResult<()> {
    let ev = evaluate(a.subject, &a.params, a.variant, &cfg.quad)?;
    let format = a.format.or(cfg.output_format).unwrap_or(Format::Plain);
    emit(&render_eval(&ev, format)?, a.out.as_deref(), out)
}

/// All grid points in row-major order, first grid outermost.
fn sweep(a: &TableArgs, cfg: &CliConfig) -> CliResult<Vec<Evaluation>> {
    let grids = a.grids();
    if grids.is_empty() {
        return Err(CliError::Usage("table needs at least one --<param>-grid".into()));
    }
    let mut points = vec![a.params.clone()];
    for (name, g) in &grids {
        points = points
            .into_iter()
            .flat_map(|p| {
                g.points().into_iter().map(move |v| {
                    let mut q = p.clone();
                    q.set(name, v);
                    q
                })
            })
            .collect();
    }
    points.iter().map(|p| evaluate(a.subject, p, a.variant, &cfg.quad)).collect()
}

fn table_cmd(a: &TableArgs, cfg: &CliConfig, out: &mut dyn Write) -> CliResult<()> {
    let rows = sweep(a, cfg)?;
    let format = a.format.or(cfg.output_format).unwrap_or(Format::Csv);
    emit(&render_table(&rows, format)?, a.out.as_deref(), out)
}

fn verify_cmd(a: &VerifyArgs, cfg: &CliConfig, out: &mut dyn Write) -> CliResult<()> {
    let mut vcfg = cfg.verify_config();
    if let Some(seed) = a.seed {
        vcfg.seed = seed;
    }
    if let Some(n) = a.samples {
        vcfg.samples = n;
    }
    if let Some(tol) = a.tol {
        for suite in a.suite.suites() {
            vcfg.tolerances.set_primary(suite, tol);
        }
    }
    vcfg.validate().map_err(|e| CliError::Config(e.to_string()))?;
    let report = verify::run(a.suite, &vcfg)?;
    let format = a.format.or(cfg.output_format).unwrap_or(Format::Json);
    emit(&render_report(&report, format)?, a.out.as_deref(), out)?;
    match report.failures().count() {
        0 => Ok(()),
        n => Err(CliError::ChecksFailed(n)),
    }
}

/// Execute an already parsed command line.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    let cfg = CliConfig::resolve(cli.config.as_deref())?;
    match &cli.command {
        Command::Eval(a) => eval_cmd(a, &cfg, out),
        Command::Verify(a) => verify_cmd(a, &cfg, out),
        Command::Table(a) => table_cmd(a, &cfg, out),
    }
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "fmk: {e}");
            e.exit_code()
        }
    }
}
