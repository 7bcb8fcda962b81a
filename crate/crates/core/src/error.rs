use thiserror::Error;

/// Errors raised by the library.
///
/// `Config` covers unsupported systems, `Usage` covers inputs that do not fit
/// the system or grid they are used with.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("no printed closed form for {group} with kind {kind}")]
    UnsupportedFormula { group: String, kind: String },

    #[error("parse error in {field}: {message}")]
    Parse { field: String, message: String },
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn parse(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            field: field.into(),
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
