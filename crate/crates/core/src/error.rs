use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// The caller passed something that violates an operation's precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A configured search cap or budget would be exceeded.
    #[error("{what} exceeds the configured limit of {limit}{hint}")]
    Resource {
        what: String,
        limit: u64,
        hint: &'static str,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn resource(what: impl Into<String>, limit: u64) -> Self {
        Error::Resource {
            what: what.into(),
            limit,
            hint: "",
        }
    }

    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
