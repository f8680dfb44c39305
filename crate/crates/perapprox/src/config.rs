//! Job descriptions, read from JSON or assembled from command-line flags.
//!
//! ```json
//! { "task": "converge", "source": { "builtin": "fibonacci" }, "lambda": 1.0, "n_max": 8 }
//! ```

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{Failure, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Task {
    Dict,
    Graph,
    Approx,
    Spectrum,
    Converge,
    Probe,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum Source {
    /// A corpus name such as `fibonacci` or `table`.
    Builtin(String),
    /// Path of a JSON substitution file.
    Substitution(PathBuf),
    /// Path of a slice text file.
    Slice(PathBuf),
    /// A periodic tile: a word, or printed rows joined by `/`.
    Tile(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Cover {
    Vertices,
    Edges,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ProbeJob {
    /// Spectrum of `diag(values)` in `(x - r, x + r)`.
    Presence { values: Vec<f64>, x: f64, m: f64, r: f64 },
    /// Spectrum of `diag(e^{i·phases})` in the disk of radius `r` around
    /// `e^{i·centre}`.
    Unitary { phases: Vec<f64>, centre: f64, r: f64 },
    /// `‖p0 + p1·A + p2·A²‖` for `A = diag(values)`.
    P2 { values: Vec<f64>, coeffs: [f64; 3] },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub task: Task,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<Source>,
    /// Letter names for `tile` sources; defaults to the distinct characters
    /// of the tile in sorted order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alphabet: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_min: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    /// Letter carrying the potential `lambda`; defaults to the first letter.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub letter: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    /// Phase grid for a Bloch cross-check of computed bands.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phases: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cover: Option<Cover>,
    /// Approximant start pattern, printed rows joined by `/`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub start: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dot: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub highlight_path: bool,
    /// Extra band table written by `converge`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bands: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probe: Option<ProbeJob>,
    /// Reserved. Present only so that it can be rejected with a clear
    /// message; every algorithm is deterministic.
    #[serde(default, skip_serializing)]
    pub seed: Option<serde_json::Value>,
}

impl JobConfig {
    pub fn new(task: Task) -> Self {
        Self {
            task,
            source: None,
            alphabet: None,
            order: None,
            cap: None,
            n: None,
            n_min: None,
            n_max: None,
            lambda: None,
            letter: None,
            tol: None,
            phases: None,
            cover: None,
            start: None,
            output: None,
            dot: None,
            highlight_path: false,
            bands: None,
            probe: None,
            seed: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: Self = serde_json::from_str(text).map_err(|e| Failure::config(format!("job config: {e}")))?;
        cfg.check()?;
        Ok(cfg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("job configs serialize") + "\n"
    }

    pub fn check(&self) -> Result<()> {
        if self.seed.is_some() {
            return Err(Failure::config("seed is reserved and not accepted: every algorithm is deterministic"));
        }
        match (self.task, &self.source, &self.probe) {
            (Task::Probe, _, None) => Err(Failure::config("probe jobs need a probe description")),
            (Task::Probe, _, Some(_)) => Ok(()),
            (_, None, _) => Err(Failure::config("a source is required")),
            _ => Ok(()),
        }?;
        if self.tol.is_some_and(|t| !(t > 0.0)) {
            return Err(Failure::config("tol must be positive"));
        }
        if let (Some(a), Some(b)) = (self.n_min, self.n_max) {
            if a > b {
                return Err(Failure::config("n_min exceeds n_max"));
            }
        }
        Ok(())
    }
}
