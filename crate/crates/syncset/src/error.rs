use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    /// A well-formed document with invalid content; `location` is a path
    /// such as `delta[3][1]`.
    #[error("{location}: {source}")]
    Invalid {
        location: String,
        source: syncset_core::Error,
    },
    #[error("{location}: {message}")]
    Shape { location: String, message: String },
    #[error("line {line}: {message}")]
    Dimacs { line: usize, message: String },
}

impl FormatError {
    pub(crate) fn invalid(location: impl Into<String>, source: syncset_core::Error) -> Self {
        FormatError::Invalid {
            location: location.into(),
            source,
        }
    }

    pub(crate) fn shape(location: impl Into<String>, message: impl Into<String>) -> Self {
        FormatError::Shape {
            location: location.into(),
            message: message.into(),
        }
    }
}
