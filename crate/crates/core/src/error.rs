use thiserror::Error;

/// Errors raised by the special functions, integrators and kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error in {func}: {detail}")]
    Domain { func: &'static str, detail: String },

    #[error("{func} has a pole at {at}")]
    Pole { func: &'static str, at: f64 },

    #[error("overflow in {func}: {detail}")]
    Overflow { func: &'static str, detail: String },

    #[error("integrand returned NaN at x = {at}")]
    NanIntegrand { at: f64 },

    #[error("semi-infinite tail did not converge before cutoff {cutoff}")]
    TailNonConvergence { cutoff: f64 },

    #[error("stencil step {h} too large for evaluation point {at}")]
    StepTooLarge { at: f64, h: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(func: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        func,
        detail: detail.into(),
    }
}
