use thiserror::Error;

use crate::format::FormatError;

/// Errors surfaced by the CLI, each with a fixed exit code.
#[derive(Debug, Error)]
pub enum DomsetError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] domset_core::Error),
    #[error("{0}")]
    Violation(String),
}

pub type Result<T, E = DomsetError> = std::result::Result<T, E>;

impl DomsetError {
    /// 0 success, 1 usage/parse, 2 precondition, 3 budget, 4 invariant or
    /// bound violation.
    pub fn exit_code(&self) -> i32 {
        use domset_core::Error as E;
        match self {
            Self::Usage(_) | Self::Format(_) | Self::Io { .. } => 1,
            Self::Violation(_) => 4,
            Self::Core(e) => match e {
                E::BudgetExhausted(_) => 3,
                E::RelationViolated(_) | E::MappingBound(_) | E::NotDominating(_) => 4,
                _ => 2,
            },
        }
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        Self::Usage(msg.into())
    }
}

pub fn read_file(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| DomsetError::Io { path: path.display().to_string(), source })
}

pub fn write_file(path: &std::path::Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| DomsetError::Io { path: path.display().to_string(), source })
}
