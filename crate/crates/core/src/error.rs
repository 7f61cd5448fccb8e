use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument outside the domain of a formula.
    #[error("{quantity} = {value:e} is out of range: {reason}")]
    Domain {
        quantity: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// An intermediate state is (nearly) resonant with one of the photons,
    /// where second-order perturbation theory breaks down.
    #[error("intermediate state {state} is resonant: detuning {detuning:e} rad/s is below the floor {floor:e} rad/s")]
    Singularity {
        state: String,
        detuning: f64,
        floor: f64,
    },

    #[error("quadrature did not converge: estimate {estimate:e} with relative change {relative_change:e} at {points} points")]
    Accuracy {
        estimate: f64,
        relative_change: f64,
        points: usize,
    },

    #[error("invalid configuration: {field}: {message}")]
    Config { field: String, message: String },

    #[error("sweep failed at grid point {index} ({variable} = {value:e}): {source}")]
    GridPoint {
        index: usize,
        variable: &'static str,
        value: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("serialization: {0}")]
    Serialize(String),
}

impl Error {
    pub(crate) fn domain(quantity: &'static str, value: f64, reason: &'static str) -> Self {
        Error::Domain {
            quantity,
            value,
            reason,
        }
    }

    pub(crate) fn config(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            field: field.into(),
            message: message.into(),
        }
    }
}
