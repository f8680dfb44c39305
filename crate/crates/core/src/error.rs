use alloc::string::String;
use alloc::vec::Vec;

use crate::symbolic::Violation;

/// Errors produced by the algorithms of this crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported dimension {found}: {context}")]
    UnsupportedDimension { found: usize, context: &'static str },

    #[error("unsupported substitution: {0}")]
    Unsupported(String),

    #[error("de Bruijn graph is not strongly connected, no global closed path exists")]
    NoGlobalPath,

    #[error("no S^k-invariant seed found for k <= {kmax} ({tried} candidates tried)")]
    SearchExhausted { kmax: usize, tried: usize },

    #[error("iteration cap reached: {0}")]
    IterationCap(String),

    #[error("hopping amplitude vanishes or is complex at site {site}")]
    DegenerateHopping { site: usize },

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("generated pattern set is not a dictionary ({} violations)", .0.len())]
    NotADictionary(Vec<Violation>),

    #[error("substitution dictionary disagrees with the fixed-point oracle: {0}")]
    OracleMismatch(String),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
