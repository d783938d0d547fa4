use thiserror::Error;

/// Failures of the command-line runner, each with its exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("math error: {0}")]
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Validation(_) => 1,
            CliError::Math(_) => 3,
        }
    }
}

/// `[Kind] message`.
pub fn describe(e: &equiloc_core::Error) -> String {
    format!("[{}] {e}", e.kind())
}

impl From<equiloc_core::Error> for CliError {
    fn from(e: equiloc_core::Error) -> Self {
        if e.is_math() {
            CliError::Math(describe(&e))
        } else {
            CliError::Validation(describe(&e))
        }
    }
}
