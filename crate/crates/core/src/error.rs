use std::path::PathBuf;

use num_complex::Complex64;
use thiserror::Error;

pub type Result<T, E = FaddeevaError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum FaddeevaError {
    /// An input lies outside the domain of the operation (NaN, infinite, wrong half-plane).
    #[error("domain error: {0}")]
    Domain(String),

    /// A parameter (order, step, term count, grid spec) is out of range.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// A direct call landed too close to a quadrature node of the rule.
    #[error("z = {z} lies within {distance:e} of quadrature node {node}")]
    PoleProximity {
        z: Complex64,
        node: f64,
        distance: f64,
    },

    #[error("evaluation error: {0}")]
    Evaluation(String),

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("arithmetic error: {0}")]
    Arithmetic(String),

    /// A fitted model failed its own residual check.
    #[error("construction error: {0}")]
    Construction(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("CSV error on {path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },

    #[error("JSON error on {path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

impl FaddeevaError {
    /// True for the error kinds a CLI should report as bad user input.
    pub fn is_parameter_error(&self) -> bool {
        matches!(self, Self::Domain(_) | Self::Parameter(_))
    }
}

pub(crate) fn check_finite(z: Complex64) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(FaddeevaError::Domain(format!("non-finite argument {z}")))
    }
}
