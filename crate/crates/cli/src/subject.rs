//! Evaluable subjects and their parameters.

use std::collections::BTreeMap;

use clap::{Args, ValueEnum};
use fractal_mehler::kernels::{
    energy_closed, energy_numeric, gauge, gh_kernel, gp_euclid, gp_heisenberg, kernel_k_at_pole, mehler_g,
    mehler_kernel_k, ou_mehler_kernel, EnergyConstant, KernelParams, PFlowParams, RadialPoint,
};
use fractal_mehler::quadrature::{EvalResult, QuadConfig};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Subject {
    /// Korányi–Folland gauge N(r, s).
    Gauge,
    /// Two-parameter Mehler kernel G*_{α,β}.
    MehlerG,
    /// Reflected Baouendi–Grushin kernel 𝒦_{α,k}.
    KernelK,
    /// 𝒦_{α,k} with its second point at the pole.
    Pole,
    /// Gaveau–Hulanicki heat kernel.
    Gh,
    /// Ornstein–Uhlenbeck Mehler kernel.
    Ou,
    /// Euclidean p-flow profile g_p.
    GpEuclid,
    /// Heisenberg p-flow profile G_p.
    GpHeis,
    /// Time integral of G_{α,α+k} by quadrature.
    EnergyNum,
    /// Closed form of the same time integral.
    EnergyClosed,
}

impl Subject {
    pub const ALL: [Subject; 10] = [
        Subject::Gauge,
        Subject::MehlerG,
        Subject::KernelK,
        Subject::Pole,
        Subject::Gh,
        Subject::Ou,
        Subject::GpEuclid,
        Subject::GpHeis,
        Subject::EnergyNum,
        Subject::EnergyClosed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Subject::Gauge => "gauge",
            Subject::MehlerG => "mehler-g",
            Subject::KernelK => "kernel-k",
            Subject::Pole => "pole",
            Subject::Gh => "gh",
            Subject::Ou => "ou",
            Subject::GpEuclid => "gp-euclid",
            Subject::GpHeis => "gp-heis",
            Subject::EnergyNum => "energy-num",
            Subject::EnergyClosed => "energy-closed",
        }
    }

    /// Whether `value · N^{2α+2k−2}` is reported alongside the value.
    pub fn has_gauge_scaling(self) -> bool {
        matches!(self, Subject::EnergyNum | Subject::EnergyClosed)
    }
}

/// Which printed energy constant `energy-closed` uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Variant {
    #[default]
    Thm,
    Meh,
}

impl From<Variant> for EnergyConstant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Thm => EnergyConstant::Theorem,
            Variant::Meh => EnergyConstant::Mehler,
        }
    }
}

/// Subject parameters. Vectors are comma lists; `--z`/`--sigma` are reduced
/// to their norms and stand in for `--r`/`--s`.
#[derive(Debug, Clone, Default, Args)]
pub struct Params {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    pub p: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub r: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub s: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub t: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub rho: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub omega: Option<f64>,
    /// Horizontal vector z, reduced to r = |z|.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, conflicts_with = "r")]
    pub z: Option<Vec<f64>>,
    /// Vertical vector σ (for kernel-k, σ′ − σ), reduced to s = |σ|.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, conflicts_with = "s")]
    pub sigma: Option<Vec<f64>>,
    /// First OU point.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub x: Option<Vec<f64>>,
    /// Second OU point.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub y: Option<Vec<f64>>,
}

/// Names accepted by `table` grids.
pub const GRID_PARAMS: [&str; 8] = ["alpha", "beta", "p", "r", "s", "t", "rho", "omega"];

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

impl Params {
    pub fn set(&mut self, name: &str, value: f64) {
        let slot = match name {
            "alpha" => &mut self.alpha,
            "beta" => &mut self.beta,
            "p" => &mut self.p,
            "r" => {
                self.z = None;
                &mut self.r
            }
            "s" => {
                self.sigma = None;
                &mut self.s
            }
            "t" => &mut self.t,
            "rho" => &mut self.rho,
            "omega" => &mut self.omega,
            _ => unreachable!("unknown grid parameter {name}"),
        };
        *slot = Some(value);
    }

    fn real(&self, name: &'static str, subject: Subject) -> CliResult<f64> {
        let v = match name {
            "alpha" => self.alpha,
            "beta" => self.beta,
            "p" => self.p,
            "r" => self.r.or_else(|| self.z.as_deref().map(norm)),
            "s" => self.s.or_else(|| self.sigma.as_deref().map(norm)),
            "t" => self.t,
            "rho" => self.rho,
            "omega" => self.omega,
            _ => None,
        };
        v.ok_or_else(|| missing(subject, name))
    }

    fn int(&self, name: &'static str, subject: Subject) -> CliResult<u32> {
        let v = match name {
            "k" => self.k,
            "m" => self.m,
            "n" => self.n,
            _ => None,
        };
        v.ok_or_else(|| missing(subject, name))
    }

    fn vector(&self, name: &'static str, subject: Subject) -> CliResult<&[f64]> {
        let v = match name {
            "x" => self.x.as_deref(),
            "y" => self.y.as_deref(),
            _ => None,
        };
        v.ok_or_else(|| missing(subject, name))
    }
}

fn missing(subject: Subject, name: &str) -> CliError {
    CliError::Usage(format!("{} requires --{name}", subject.name()))
}

/// One evaluated value with the inputs that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub subject: Subject,
    pub inputs: BTreeMap<String, f64>,
    pub value: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub err_estimate: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_evals: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub converged: Option<bool>,
    /// `value · N(r,s)^{2α+2k−2}` for the energy subjects.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gauge_scaled: Option<f64>,
}

impl Evaluation {
    fn exact(subject: Subject, inputs: BTreeMap<String, f64>, value: f64) -> Self {
        Evaluation {
            subject,
            inputs,
            value,
            err_estimate: None,
            n_evals: None,
            converged: None,
            gauge_scaled: None,
        }
    }

    fn quadrature(subject: Subject, inputs: BTreeMap<String, f64>, res: EvalResult) -> Self {
        Evaluation {
            err_estimate: Some(res.err_estimate),
            n_evals: Some(res.n_evals),
            converged: Some(res.converged),
            ..Self::exact(subject, inputs, res.value)
        }
    }
}

/// Evaluate `subject` through the library.
pub fn evaluate(subject: Subject, p: &Params, variant: Variant, quad: &QuadConfig) -> CliResult<Evaluation> {
    let mut inputs = BTreeMap::new();
    let mut real = |name: &'static str| -> CliResult<f64> {
        let v = p.real(name, subject)?;
        inputs.insert(name.to_string(), v);
        Ok(v)
    };
    let ev = match subject {
        Subject::Gauge => {
            let (r, s) = (real("r")?, real("s")?);
            if !(r >= 0.0 && s >= 0.0) {
                return Err(CliError::Usage("gauge requires r >= 0 and s >= 0".into()));
            }
            Evaluation::exact(subject, inputs, gauge(r, s))
        }
        Subject::MehlerG => {
            let (alpha, beta) = (real("alpha")?, real("beta")?);
            let pt = RadialPoint::new(real("r")?, real("s")?, real("t")?)?;
            let k = p.int("k", subject)?;
            let res = mehler_g(&KernelParams::new(alpha, beta, k)?, &pt, quad)?;
            inputs.insert("k".into(), k as f64);
            Evaluation::quadrature(subject, inputs, res)
        }
        Subject::KernelK => {
            let (alpha, r, rho, s, t) = (real("alpha")?, real("r")?, real("rho")?, real("s")?, real("t")?);
            let k = p.int("k", subject)?;
            let res = mehler_kernel_k(alpha, k, r, rho, s, t, quad)?;
            inputs.insert("k".into(), k as f64);
            Evaluation::quadrature(subject, inputs, res)
        }
        Subject::Pole => {
            let alpha = real("alpha")?;
            let pt = RadialPoint::new(real("r")?, real("s")?, real("t")?)?;
            let k = p.int("k", subject)?;
            let res = kernel_k_at_pole(alpha, k, &pt, quad)?;
            inputs.insert("k".into(), k as f64);
            Evaluation::quadrature(subject, inputs, res)
        }
        Subject::Gh => {
            let pt = RadialPoint::new(real("r")?, real("s")?, real("t")?)?;
            let (m, k) = (p.int("m", subject)?, p.int("k", subject)?);
            let res = gh_kernel(m, k, &pt, quad)?;
            inputs.insert("m".into(), m as f64);
            inputs.insert("k".into(), k as f64);
            Evaluation::quadrature(subject, inputs, res)
        }
        Subject::Ou => {
            let (omega, t) = (real("omega")?, real("t")?);
            let (x, y) = (p.vector("x", subject)?, p.vector("y", subject)?);
            if x.len() != y.len() || x.is_empty() {
                return Err(CliError::Usage("ou requires --x and --y of equal, non-zero length".into()));
            }
            let value = ou_mehler_kernel(x.len() as u32, omega, x, y, t)?;
            for (i, (a, b)) in x.iter().zip(y).enumerate() {
                inputs.insert(format!("x{}", i + 1), *a);
                inputs.insert(format!("y{}", i + 1), *b);
            }
            Evaluation::exact(subject, inputs, value)
        }
        Subject::GpEuclid => {
            let (pp, r, t) = (real("p")?, real("r")?, real("t")?);
            let n = p.int("n", subject)?;
            let value = gp_euclid(&PFlowParams::euclidean(n, pp)?, r, t)?;
            inputs.insert("n".into(), n as f64);
            Evaluation::exact(subject, inputs, value)
        }
        Subject::GpHeis => {
            let pp = real("p")?;
            let pt = RadialPoint::new(real("r")?, real("s")?, real("t")?)?;
            let n = p.int("n", subject)?;
            let res = gp_heisenberg(&PFlowParams::heisenberg(n, pp)?, &pt, quad)?;
            inputs.insert("n".into(), n as f64);
            Evaluation::quadrature(subject, inputs, res)
        }
        Subject::EnergyNum | Subject::EnergyClosed => {
            let (alpha, r, s) = (real("alpha")?, real("r")?, real("s")?);
            let k = p.int("k", subject)?;
            inputs.insert("k".into(), k as f64);
            let mut ev = if subject == Subject::EnergyNum {
                Evaluation::quadrature(subject, inputs, energy_numeric(alpha, k, r, s, quad)?)
            } else {
                Evaluation::exact(subject, inputs, energy_closed(alpha, k, r, s, variant.into())?)
            };
            ev.gauge_scaled = Some(ev.value * gauge(r, s).powf(2.0 * alpha + 2.0 * k as f64 - 2.0));
            ev
        }
    };
    Ok(ev)
}
