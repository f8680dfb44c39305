use std::path::Path;

use perapprox_core::Error as CoreError;

/// A failed job, carrying the process exit status it maps to.
#[derive(Debug, thiserror::Error)]
pub enum Failure {
    /// Malformed configuration, arguments or input files.
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    NoGlobalPath(String),
    #[error("{0}")]
    Numeric(String),
    /// A validation gate rejected an intermediate result.
    #[error("{0}")]
    Gate(String),
    #[error("{0}")]
    Io(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Config(_) => 2,
            Failure::NoGlobalPath(_) => 3,
            Failure::Numeric(_) => 4,
            Failure::Gate(_) => 5,
        }
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Failure::Config(msg.into())
    }

    pub(crate) fn read(path: &Path, e: std::io::Error) -> Self {
        Failure::Config(format!("cannot read {}: {e}", path.display()))
    }

    pub(crate) fn write(path: &Path, e: std::io::Error) -> Self {
        Failure::Io(format!("cannot write {}: {e}", path.display()))
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let msg = e.to_string();
        match e {
            CoreError::InvalidArgument(_) | CoreError::UnsupportedDimension { .. } | CoreError::Unsupported(_) => {
                Failure::Config(msg)
            }
            CoreError::NoGlobalPath => Failure::NoGlobalPath(msg),
            CoreError::IterationCap(_) | CoreError::DegenerateHopping { .. } | CoreError::Numeric(_) => {
                Failure::Numeric(msg)
            }
            CoreError::SearchExhausted { .. }
            | CoreError::Precondition(_)
            | CoreError::NotADictionary(_)
            | CoreError::OracleMismatch(_) => Failure::Gate(msg),
        }
    }
}

pub type Result<T> = std::result::Result<T, Failure>;
