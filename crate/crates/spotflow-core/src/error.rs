//! Error type shared across the crate.

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Shapes disagree for the named operation.
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: Vec<usize>,
        right: Vec<usize>,
    },

    /// An argument is outside the operation's domain.
    #[error("domain error in {op}: {msg}")]
    Domain { op: &'static str, msg: String },

    /// A configuration value violates its invariants.
    #[error("invalid config: {0}")]
    Config(String),

    /// The condition cache does not cover a block or token the partial
    /// forward needs.
    #[error("condition cache incomplete: {0}")]
    CacheIncomplete(String),

    /// The active/reuse partition is inconsistent.
    #[error("routing invariant violated: {0}")]
    RoutingInvariant(String),

    /// An internal consistency assertion failed (a bug, not bad input).
    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
