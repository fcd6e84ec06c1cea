use thiserror::Error;

/// Library error. `InvalidInput` means a precondition on the caller's data failed;
/// the rest are numerical failures.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum QwError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("orthogonal states: {0}")]
    Orthogonal(String),
    #[error("no convergence: {0}")]
    NoConvergence(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl QwError {
    pub fn is_input_error(&self) -> bool {
        matches!(self, QwError::InvalidInput(_))
    }
}

pub type Result<T> = std::result::Result<T, QwError>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(QwError::InvalidInput(msg.into()))
}
