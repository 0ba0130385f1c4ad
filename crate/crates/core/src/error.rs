use std::path::PathBuf;

use thiserror::Error;

/// Errors produced across the simulator, model, and harness layers.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated an operation's precondition.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// A formula was evaluated outside its domain of validity.
    #[error("domain error: {0}")]
    Domain(String),

    /// The request exceeds a size limit (qubit count, matrix dimension).
    #[error("resource error: {0}")]
    Resource(String),

    /// Structured input failed validation; `key` names the offending field.
    #[error("parse error at `{key}`: {message}")]
    Parse { key: String, message: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn parse(key: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            key: key.into(),
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code for this error: 1 for domain/parameter problems,
    /// 2 for I/O and parse failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parameter(_) | Error::Domain(_) | Error::Resource(_) => 1,
            Error::Parse { .. } | Error::Io { .. } => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
