use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("malformed structure: {0}")]
    Structure(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("budget of {limit} exceeded while {what}")]
    Budget { what: &'static str, limit: usize },

    /// A combinatorial invariant that should be impossible to break was broken.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
