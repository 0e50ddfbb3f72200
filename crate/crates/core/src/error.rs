use thiserror::Error;

/// Errors raised by the solver library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error in {function}: {detail}")]
    Domain {
        function: &'static str,
        detail: String,
    },

    #[error("invalid potential: {0}")]
    InvalidSpec(String),

    #[error("invalid quantum numbers: {0}")]
    InvalidQuantumNumbers(String),

    #[error("not a bound-state energy: |E| = {energy} must be below the mass {mass}")]
    NotBound { energy: f64, mass: f64 },

    #[error("no real delta: parameters outside the method's regime (discriminant {discriminant})")]
    NoRealDelta { discriminant: f64 },

    #[error("{what} did not converge: {detail}")]
    Convergence { what: &'static str, detail: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(
        "normalization sum non-positive ({value}): parameters outside regime or cancellation failure"
    )]
    NonPositiveRadicand { value: f64 },

    #[error("state not available: {0}")]
    NoSuchState(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(function: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        function,
        detail: detail.into(),
    }
}
