use std::fmt;

/// Errors produced by the distillation kernels and file formats.
#[derive(Debug)]
pub enum Error {
    /// A configuration value violates its documented range.
    InvalidConfig(String),
    /// An input value (box dimensions, exponent, mask list, ...) is out of range.
    InvalidInput(String),
    /// Two grids that must agree in shape or spec do not.
    ShapeMismatch(String),
    /// A binary grid file is malformed (bad magic, version, dtype, or size).
    BadGridFile(String),
    /// The training loop blew up: the total loss grew past the abort threshold.
    Diverged {
        step: usize,
        initial: f64,
        current: f64,
    },
    /// A trace summary was requested for an empty trace.
    EmptyTrace,
    Io(std::io::Error),
    Json(serde_json::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidConfig(msg) => write!(f, "invalid config: {msg}"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::ShapeMismatch(msg) => write!(f, "shape mismatch: {msg}"),
            Error::BadGridFile(msg) => write!(f, "bad grid file: {msg}"),
            Error::Diverged {
                step,
                initial,
                current,
            } => write!(
                f,
                "training diverged at step {step}: total loss {current:.6e} exceeds 10x its initial value {initial:.6e}"
            ),
            Error::EmptyTrace => write!(f, "cannot summarize an empty training trace"),
            Error::Io(e) => write!(f, "io error: {e}"),
            Error::Json(e) => write!(f, "json error: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            Error::Json(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
