use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error("parse error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{path}: {message}")]
    Field { path: String, message: String },

    #[error("{path}: malformed rational {text:?}")]
    MalformedRational { path: String, text: String },

    #[error("no {kind} named {name:?}")]
    UnknownName { kind: &'static str, name: String },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] bihom_core::Error),
}

impl CliError {
    pub(crate) fn field(path: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Field {
            path: path.into(),
            message: message.into(),
        }
    }
}
