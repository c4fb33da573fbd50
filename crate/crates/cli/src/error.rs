use thiserror::Error;

/// Failures, each tied to a fixed process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("verification failed: {0}")]
    VerifyFailed(String),
    #[error("{message}")]
    Inadmissible {
        message: String,
        suggestions: Vec<usize>,
    },
    #[error("{0}")]
    Format(String),
    #[error("{0}")]
    Framing(String),
    #[error("block {block}: {reason}")]
    Decode { block: usize, reason: String },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::VerifyFailed(_) => 1,
            CliError::Inadmissible { .. } => 2,
            CliError::Format(_) | CliError::Io(_) => 3,
            CliError::Framing(_) => 4,
            CliError::Decode { .. } => 5,
        }
    }
}

impl From<balanced_rs::FormatError> for CliError {
    fn from(e: balanced_rs::FormatError) -> Self {
        CliError::Format(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Format(format!("malformed JSON: {e}"))
    }
}
