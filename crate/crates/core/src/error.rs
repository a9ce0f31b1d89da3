use thiserror::Error;

/// Errors raised by the evaluation, series, oracle and verification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("series structure error: {0}")]
    Structure(String),

    #[error("integration failed at t = {t}: {reason}")]
    Integration { t: f64, reason: String },

    #[error("no sign change of the shooting residual on [{lo}, {hi}]")]
    Bracket { lo: f64, hi: f64 },

    #[error("tolerance {tol:e} not reached (best estimate error {achieved:e})")]
    Tolerance { tol: f64, achieved: f64 },

    #[error("unknown inequality case `{0}`")]
    UnknownCase(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
