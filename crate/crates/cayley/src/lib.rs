//! File formats, reports and the command line front end for `cayley-core`.
//!
//! - [`json`]: exact element encoding.
//! - [`csv`] and [`pgm`]: sign tables as text and grayscale images.
//! - [`report`]: text and JSON renderings of elimination, triples and scans.
//! - [`par`]: row-parallel table construction.
//! - [`verify`]: the invariant suite behind `cayley verify`.

pub mod cli;
pub mod csv;
pub mod json;
pub mod par;
pub mod pgm;
pub mod report;
pub mod verify;

pub use cayley_core as core;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] cayley_core::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad coefficient {0:?}: expected an integer or num/den")]
    Coefficient(String),
    #[error("coefficient count {len} does not match level {level}")]
    CoefficientCount { level: u32, len: usize },
    #[error("csv row {row}: {msg}")]
    Csv { row: usize, msg: String },
    #[error("table side {side} exceeds {max}")]
    TableTooLarge { side: usize, max: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
