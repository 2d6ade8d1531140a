use thiserror::Error;

/// Errors raised by the toolkit.
///
/// Variants split into two families: input that could not be understood
/// (`Parse`, `InvalidInput`) and instances that were understood but exceed a
/// documented size or search budget (`TooLarge`, `Budget`). The CLI maps the
/// first family to exit status 2 and the second to exit status 1.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }

    /// Process exit status the CLI uses for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::InvalidInput(_) => 2,
            Error::TooLarge(_) | Error::Budget(_) | Error::Internal(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
