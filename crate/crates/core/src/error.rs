//! Crate-wide error type.
//!
//! Variants map onto the failure classes the harness distinguishes at
//! runtime: configuration problems, workspace setup, execution, judging,
//! checkpoint tampering/corruption, and plain domain violations.

use std::path::PathBuf;

/// Errors produced by the harness.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Invalid or missing configuration (unknown model, bad manifest, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// A value outside its documented domain (scores, counts, shapes).
    #[error("domain error: {0}")]
    Domain(String),

    /// Workspace or repository setup failed.
    #[error("setup error: {0}")]
    Setup(String),

    /// Spawning or supervising an agent process failed (distinct from a
    /// nonzero agent exit code, which is a normal result).
    #[error("execution error: {0}")]
    Execution(String),

    /// Tier dependency constraints were violated (e.g. T6 without T5).
    #[error("dependency error: {0}")]
    Dependency(String),

    /// Checkpoint config hash does not match the current experiment.
    #[error("checkpoint tamper detected: stored config hash {stored} != current {current}")]
    Tamper { stored: String, current: String },

    /// Checkpoint file exists but cannot be parsed.
    #[error("corrupt checkpoint state: {0}")]
    CorruptState(String),

    /// A judge response could not be parsed into a verdict.
    #[error("verdict parse error: {0}")]
    VerdictParse(String),

    /// A run produced zero usable judge verdicts.
    #[error("run unevaluable: {0}")]
    Unevaluable(String),

    /// The run was deliberately aborted by an observer (crash injection,
    /// Ctrl+C handling).
    #[error("run aborted after {completed_units} completed units")]
    Aborted { completed_units: usize },

    #[error("I/O error at {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("YAML error: {0}")]
    Yaml(#[from] serde_yaml::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
