use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Invalid constructor or operation parameters.
    #[error("invalid parameter: {0}")]
    Parameter(String),
    /// A documented precondition of the operation does not hold.
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// Input exceeds the size an exhaustive or numeric path is willing to handle.
    #[error("refused: {0}")]
    Refused(String),
    #[error("domain error: {0}")]
    Domain(String),
}

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
