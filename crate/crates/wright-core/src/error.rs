use thiserror::Error;

/// Errors shared by every kernel and driver in this crate.
///
/// Domain and pole violations are rejected eagerly; non-convergence of a
/// truncated series is *not* an error (the caller gets a `SeriesEval` with
/// `converged == false`) unless an operation promises a converged value.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum WrightError {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole error: {0}")]
    Pole(String),

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("series did not converge: {0}")]
    NonConvergence(String),

    #[error("quadrature failure: {0}")]
    QuadratureFailure(String),

    #[error("manifest error: {0}")]
    Manifest(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for WrightError {
    fn from(e: std::io::Error) -> Self {
        WrightError::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, WrightError>;
