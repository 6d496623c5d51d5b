use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage error: {0}")]
    Usage(String),

    #[error("input error: file not found: {}", .0.display())]
    FileNotFound(PathBuf),

    #[error("input error: cannot read {}: {source}", path.display())]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("input error: column `{0}` not found")]
    ColumnNotFound(String),

    #[error("input error: cannot parse `{token}` as a number at line {line}")]
    Parse { line: u64, token: String },

    #[error("input error: {0}")]
    Empty(skewviz_core::Error),

    #[error("output error: cannot write {}: {source}", path.display())]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("computation error: {0}")]
    Compute(skewviz_core::Error),
}

impl From<skewviz_core::Error> for CliError {
    fn from(e: skewviz_core::Error) -> Self {
        match e {
            skewviz_core::Error::EmptySample { .. } => CliError::Empty(e),
            other => CliError::Compute(other),
        }
    }
}

impl CliError {
    /// 1 usage, 2 input/output, 3 computation.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::FileNotFound(_)
            | CliError::Read { .. }
            | CliError::ColumnNotFound(_)
            | CliError::Parse { .. }
            | CliError::Empty(_)
            | CliError::Write { .. } => 2,
            CliError::Compute(_) => 3,
        }
    }
}
