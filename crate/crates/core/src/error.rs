//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An input violated a documented precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// A string could not be parsed into the requested value.
    #[error("parse error: {0}")]
    Parse(String),

    /// The integrator produced a non-finite state.
    #[error("integration diverged at t = {t_last}: non-finite state")]
    Diverged { t_last: f64 },

    /// A regularized sum or extrapolation failed to settle.
    #[error("convergence failure: {0}")]
    Convergence(String),

    /// A trajectory did not carry enough signal for the requested estimate.
    #[error("unmeasurable: {0}")]
    Unmeasurable(String),

    /// No steady-state root was found in the physical range.
    #[error("empty steady-state branch: {0}")]
    EmptyBranch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
