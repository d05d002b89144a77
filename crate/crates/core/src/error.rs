use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed word, polynomial or presentation text. `column` is 1-based.
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },

    #[error("exponent at column {column} is outside the signed 64-bit range")]
    ExponentRange { column: usize },

    #[error("exponent overflow while reducing word")]
    ExponentOverflow,

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid presentation: {0}")]
    Presentation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn syntax(column: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            column,
            message: message.into(),
        }
    }
}
