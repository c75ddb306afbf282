use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the region where the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative or adaptive scheme ran out of budget before reaching its tolerance.
    #[error("numeric error: {message} (achieved error estimate {estimate:e})")]
    Numeric { message: String, estimate: f64 },

    /// A quotient function was evaluated at a zero of its denominator.
    #[error("pole of {function} at u = {u} (nearest singular argument {nearest})")]
    Pole {
        function: &'static str,
        u: f64,
        nearest: f64,
    },

    /// The partial derivatives of an immersion fail to span a 3-space.
    #[error("degenerate immersion at {point:?}: {reason}")]
    Degenerate { point: [f64; 3], reason: String },

    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("configuration error: {0}")]
    Configuration(String),

    /// The eigenvalue triple does not carry the ideal pattern, so no proof case applies.
    #[error("classification error: pattern residual {residual:e} exceeds tolerance {tol:e}")]
    Classification { residual: f64, tol: f64 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Configuration(msg.into())
    }
}
