use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, MeyerError>;

#[derive(Debug, Error)]
pub enum MeyerError {
    #[error("non-finite value for {what}: {value}")]
    NonFinite { what: &'static str, value: f64 },

    #[error("invalid quadrature configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid integration interval [{a}, {b}]")]
    InvalidInterval { a: f64, b: f64 },

    #[error("quadrature did not converge: last estimate {estimate}, achieved error {error:e} after {panels} panels")]
    NoConvergence {
        estimate: f64,
        error: f64,
        panels: usize,
    },

    #[error("invalid sampling grid: {0}")]
    InvalidGrid(String),

    #[error("grid spacing {dt} does not resolve the wavelet band (need dt < 3/8)")]
    GridTooCoarse { dt: f64 },

    #[error("signals live on different grids")]
    GridMismatch,

    #[error("invalid low-pass cutoff {0} (must be positive)")]
    InvalidCutoff(f64),

    #[error("invalid export request: {0}")]
    InvalidRequest(String),

    #[error("failed to write {path}: {source}")]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
