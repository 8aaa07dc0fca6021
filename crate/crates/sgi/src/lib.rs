//! File formats, output directories, the parallel suite runner and the
//! `sgi` command line on top of `sgi-core`.

pub mod cli;
pub mod config;
pub mod formats;
pub mod runner;
pub mod store;

use std::path::PathBuf;

pub use config::{OutputFormat, RunConfig};

#[derive(Debug, thiserror::Error)]
pub enum SgiError {
    #[error(transparent)]
    Core(#[from] sgi_core::Error),
    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl SgiError {
    pub(crate) fn io(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> SgiError {
        let path = path.into();
        move |source| SgiError::Io { path, source }
    }
}
