use thiserror::Error;

use crate::literal::SyntaxError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error at {0}")]
    Syntax(SyntaxError),
    #[error("malformed element: {0}")]
    Shape(String),
    #[error("invalid JSON input: {0}")]
    Json(String),
    #[error("{0}")]
    Usage(String),
    #[error("cannot read input: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    /// `2` for anything wrong with the input itself, `3` when a well-formed
    /// request has no answer.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 3,
            _ => 2,
        }
    }
}

impl From<einfty::AlgebraError> for CliError {
    fn from(e: einfty::AlgebraError) -> Self {
        CliError::Domain(e.to_string())
    }
}
