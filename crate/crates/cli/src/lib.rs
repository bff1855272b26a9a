//! Library side of the `gem` command: catalog files, triangulation export,
//! fixtures, reports and table verification.

pub mod analyze;
pub mod catalog;
pub mod fixtures;
pub mod moves;
pub mod tri;
pub mod verify;

use gem_census::CensusError;
use gem_core::GemError;

/// Errors of the command-line front end, each mapped to an exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Code(#[from] GemError),
    #[error(transparent)]
    Census(#[from] CensusError),
}

impl CliError {
    /// 1 for a verification mismatch, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) | CliError::Census(CensusError::RecordMismatch { .. }) => 1,
            _ => 2,
        }
    }

    pub fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.display().to_string(),
            source,
        }
    }
}
