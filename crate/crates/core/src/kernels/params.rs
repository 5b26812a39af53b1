use serde::{Deserialize, Serialize};

use crate::error::domain;
use crate::Result;

/// Parameters `(α, β, k)` of the two-parameter Mehler kernel, `β > α > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KernelParams {
    pub alpha: f64,
    pub beta: f64,
    pub k: u32,
}

impl KernelParams {
    pub fn new(alpha: f64, beta: f64, k: u32) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(domain("KernelParams", format!("alpha must be > 0, got {alpha}")));
        }
        if !(beta > alpha) || !beta.is_finite() {
            return Err(domain("KernelParams", format!("beta must exceed alpha = {alpha}, got {beta}")));
        }
        if k == 0 {
            return Err(domain("KernelParams", "k must be >= 1"));
        }
        Ok(KernelParams { alpha, beta, k })
    }

    /// The parameters with `β = α + k`, the only choice for which the kernel
    /// is the pole of the reflected Baouendi–Grushin heat kernel.
    pub fn critical(alpha: f64, k: u32) -> Result<Self> {
        Self::new(alpha, alpha + k as f64, k)
    }

    /// Degree of homogeneity under the parabolic dilations, `−2β`.
    pub fn homogeneity_degree(&self) -> f64 {
        -2.0 * self.beta
    }

    /// The fractal dimension `m_α = 2α`.
    pub fn fractal_dimension(&self) -> f64 {
        2.0 * self.alpha
    }

    pub(crate) fn validate(&self) -> Result<()> {
        Self::new(self.alpha, self.beta, self.k).map(|_| ())
    }
}

/// Reduced coordinates: horizontal radius `r = |z|`, vertical radius
/// `s = |σ|`, time `t > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialPoint {
    pub r: f64,
    pub s: f64,
    pub t: f64,
}

impl RadialPoint {
    pub fn new(r: f64, s: f64, t: f64) -> Result<Self> {
        let p = RadialPoint { r, s, t };
        p.validate()?;
        Ok(p)
    }

    /// Reduce vectors `z ∈ ℝ^m`, `σ ∈ ℝ^k` to their radii.
    pub fn from_vectors(z: &[f64], sigma: &[f64], t: f64) -> Result<Self> {
        let norm = |v: &[f64]| v.iter().map(|x| x * x).sum::<f64>().sqrt();
        Self::new(norm(z), norm(sigma), t)
    }

    /// Image under the parabolic dilation `(ℓr, ℓ²s, ℓ²t)`.
    pub fn dilate(&self, ell: f64) -> Self {
        RadialPoint {
            r: ell * self.r,
            s: ell * ell * self.s,
            t: ell * ell * self.t,
        }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        let RadialPoint { r, s, t } = *self;
        if !(r >= 0.0) || !r.is_finite() || !(s >= 0.0) || !s.is_finite() {
            return Err(domain("RadialPoint", format!("radii must be finite and >= 0, got r={r}, s={s}")));
        }
        if !(t > 0.0) || !t.is_finite() {
            return Err(domain("RadialPoint", format!("time must be finite and > 0, got {t}")));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Geometry {
    Euclidean,
    Heisenberg,
}

/// Normalized p-flow parameters: Euclidean `ℝ^n` with `p > 1`, or the
/// Heisenberg group `ℍ^n` (`Q = 2n + 2`) with `1 < p < Q`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PFlowParams {
    pub geometry: Geometry,
    pub n: u32,
    pub p: f64,
}

impl PFlowParams {
    pub fn euclidean(n: u32, p: f64) -> Result<Self> {
        if n < 2 {
            return Err(domain("PFlowParams", format!("Euclidean dimension must be >= 2, got {n}")));
        }
        if !(p > 1.0) || !p.is_finite() {
            return Err(domain("PFlowParams", format!("p must be > 1, got {p}")));
        }
        Ok(PFlowParams {
            geometry: Geometry::Euclidean,
            n,
            p,
        })
    }

    pub fn heisenberg(n: u32, p: f64) -> Result<Self> {
        if n < 1 {
            return Err(domain("PFlowParams", "Heisenberg n must be >= 1"));
        }
        let q = 2.0 * n as f64 + 2.0;
        if !(p > 1.0 && p < q) {
            return Err(domain("PFlowParams", format!("p must lie in (1, {q}), got {p}")));
        }
        Ok(PFlowParams {
            geometry: Geometry::Heisenberg,
            n,
            p,
        })
    }

    /// Euclidean fractal dimension `κ = (n + p − 2)/(p − 1)`.
    pub fn kappa(&self) -> f64 {
        (self.n as f64 + self.p - 2.0) / (self.p - 1.0)
    }

    /// Homogeneous dimension `Q = 2n + 2` of `ℍ^n`.
    pub fn q(&self) -> f64 {
        2.0 * self.n as f64 + 2.0
    }

    /// `α(p) = (Q − p)/(2(p − 1))`.
    pub fn alpha(&self) -> f64 {
        (self.q() - self.p) / (2.0 * (self.p - 1.0))
    }

    /// `β(p) = α(p) + 1 = (Q + p − 2)/(2(p − 1))`.
    pub fn beta(&self) -> f64 {
        (self.q() + self.p - 2.0) / (2.0 * (self.p - 1.0))
    }

    /// The Mehler parameters `(α(p), β(p), 1)` of the Heisenberg profile.
    pub fn kernel_params(&self) -> Result<KernelParams> {
        self.require(Geometry::Heisenberg, "kernel_params")?;
        KernelParams::new(self.alpha(), self.beta(), 1)
    }

    pub(crate) fn require(&self, g: Geometry, func: &'static str) -> Result<()> {
        if self.geometry != g {
            return Err(domain(func, format!("expected {g:?} parameters, got {:?}", self.geometry)));
        }
        match g {
            Geometry::Euclidean => Self::euclidean(self.n, self.p).map(|_| ()),
            Geometry::Heisenberg => Self::heisenberg(self.n, self.p).map(|_| ()),
        }
    }
}
