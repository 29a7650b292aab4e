use std::path::PathBuf;

use serde_json::json;
use swb_core::SwbError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    /// The document does not match the schema; `path` is a JSON pointer.
    #[error("schema error at {path:?}: {reason}")]
    Schema { path: String, reason: String },
    /// The document is well-formed but describes an impossible object.
    #[error("invariant violated at {path:?}: {reason}")]
    Invariant { path: String, reason: String },
    #[error("cannot {op} a {kind} document")]
    UnsupportedKind { op: &'static str, kind: &'static str },
    #[error("rank {rank} is above the enumeration cap {cap}")]
    CapExceeded { rank: usize, cap: usize },
    #[error("{0}")]
    Domain(#[from] SwbError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn schema(path: impl Into<String>, reason: impl Into<String>) -> Self {
        CliError::Schema { path: path.into(), reason: reason.into() }
    }

    pub fn invariant(path: impl Into<String>, reason: impl Into<String>) -> Self {
        CliError::Invariant { path: path.into(), reason: reason.into() }
    }

    /// 2 for usage errors, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Schema { .. } => "schema",
            CliError::Invariant { .. } => "invariant",
            CliError::UnsupportedKind { .. } => "unsupported_kind",
            CliError::CapExceeded { .. } => "cap_exceeded",
            CliError::Domain(_) => "domain",
            CliError::Io { .. } => "io",
        }
    }

    /// The machine-readable form printed under `--json`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut body = json!({ "code": self.code(), "message": self.to_string() });
        match self {
            CliError::Schema { path, reason } | CliError::Invariant { path, reason } => {
                body["path"] = json!(path);
                body["reason"] = json!(reason);
            }
            CliError::Io { path, .. } => body["file"] = json!(path.display().to_string()),
            _ => {}
        }
        json!({ "error": body })
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
