//! File formats, job configuration and the command-line pipeline for
//! `perapprox-core`.
//!
//! A job names a source (built-in example, substitution file, slice file or
//! periodic tile) and one task: `dict`, `graph`, `approx`, `spectrum`,
//! `converge` or `probe`. [`run`] executes it; failures carry distinct exit
//! codes (1 output error, 2 configuration or unreadable input, 3 no global
//! path, 4 numeric failure, 5 rejected by a validation gate).

pub mod config;
pub mod error;
pub mod formats;
mod run;

pub use config::JobConfig;
pub use error::Failure;
pub use run::run;
