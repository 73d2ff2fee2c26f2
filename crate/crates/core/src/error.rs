use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// Every variant maps onto one of the CLI exit codes (see [`Error::exit_code`]).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The request needs more known coefficients than the input carries.
    #[error("precision error: {what} needs {needed} but only {available} available")]
    Precision {
        what: String,
        needed: usize,
        available: usize,
    },

    /// The Hecke algebra splits into several Galois orbits.
    #[error("multiple Galois classes: characteristic polynomial factors as {}", factors.join(" * "))]
    MultipleClass { factors: Vec<String> },

    /// Two expansions were compared as eigenforms but their ratios disagree.
    #[error("not an eigenform: ratio changes at index ({}, {}, {})", triple.0, triple.1, triple.2)]
    NotEigenform { triple: (i64, i64, i64) },

    /// Malformed interchange record.
    #[error("format error: {0}")]
    Format(String),

    #[error("io error: {0}")]
    Io(String),

    /// An internal self-check failed; always a bug.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn precision(what: impl Into<String>, needed: usize, available: usize) -> Self {
        Error::Precision {
            what: what.into(),
            needed,
            available,
        }
    }

    /// Exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Precision { .. } => 3,
            Error::Internal(_) | Error::NotEigenform { .. } => 1,
            _ => 2,
        }
    }

    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Precision { .. } => "precision",
            Error::MultipleClass { .. } => "multiple-class",
            Error::NotEigenform { .. } => "not-eigenform",
            Error::Format(_) => "format",
            Error::Io(_) => "io",
            Error::Internal(_) => "internal",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}
