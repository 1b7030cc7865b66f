//! Error type shared by the subcommands, with the process exit code each
//! class maps to: 2 for configuration and input-content problems, 3 for
//! filesystem and OS-level failures.

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad thresholds, bad parameters, unknown items, unusable input
    /// content. Exit code 2.
    #[error("{0}")]
    Config(String),
    /// A report file that does not parse as a mining report. Exit code 2.
    #[error("malformed report {path}: {reason}")]
    MalformedReport { path: PathBuf, reason: String },
    /// Filesystem trouble. Exit code 3.
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::MalformedReport { .. } => 2,
            CliError::Io { .. } => 3,
        }
    }
}

impl From<negarm_core::TransactionError> for CliError {
    fn from(err: negarm_core::TransactionError) -> Self {
        CliError::Config(err.to_string())
    }
}

impl From<negarm_core::ConfigError> for CliError {
    fn from(err: negarm_core::ConfigError) -> Self {
        CliError::Config(err.to_string())
    }
}
