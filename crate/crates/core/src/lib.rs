//! Fractal Mehler kernels and the machinery needed to check them.
//!
//! The crate is organised bottom-up:
//!
//! * [`specfun`]: gamma, exponentially scaled `I_ν`, `J_ν`, Gauss `₂F₁` and the
//!   sphere exponential integral.
//! * [`quadrature`]: adaptive Gauss–Kronrod integration, semi-infinite drivers,
//!   the radial (Bochner) Fourier reduction and the time-profile integrator.
//! * [`kernels`]: the two-parameter Mehler kernel `G*_{α,β}`, the reflected
//!   Baouendi–Grushin kernel `𝒦_{α,k}`, the Ornstein–Uhlenbeck Mehler kernel,
//!   p-flow profiles and the conformal time-integral energies.
//! * [`diffops`]: central-difference residuals of the differential operators.
//! * [`verify`]: identity suites producing reproducible [`verify::VerificationReport`]s.

// `!(x > 0.0)` is used throughout so that NaN arguments are rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// Tabulated coefficients keep the digits of their sources.
#![allow(clippy::excessive_precision)]

pub mod diffops;
pub mod error;
pub mod kernels;
pub mod quadrature;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
