use std::fmt;
use std::io;
use std::path::PathBuf;

/// Errors of curve IO, report emission and the CLI.
#[derive(Debug)]
pub enum Error {
    /// Reading or writing a file failed.
    Io { path: PathBuf, source: io::Error },
    /// Input did not parse under its declared format.
    Parse { context: String, message: String },
    /// The geometry pipeline rejected its input.
    Curve(rhombic_core::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    pub(crate) fn parse(context: impl Into<String>, message: impl fmt::Display) -> Self {
        Error::Parse { context: context.into(), message: message.to_string() }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Io { path, source } => write!(f, "{}: {source}", path.display()),
            Error::Parse { context, message } => write!(f, "{context}: {message}"),
            Error::Curve(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io { source, .. } => Some(source),
            Error::Curve(e) => Some(e),
            Error::Parse { .. } => None,
        }
    }
}

impl From<rhombic_core::Error> for Error {
    fn from(e: rhombic_core::Error) -> Self {
        Error::Curve(e)
    }
}
