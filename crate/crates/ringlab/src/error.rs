//! CLI-layer errors: everything here is an infrastructure failure (exit
//! code 2), as opposed to mathematical findings which verify reports in its
//! output.

use thiserror::Error;

use crate::expr::ParseError;
use ringlab_core::RingError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Ring(#[from] RingError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed .ring file: {0}")]
    Format(String),
    #[error("unknown check id '{0}'")]
    UnknownCheck(String),
}
