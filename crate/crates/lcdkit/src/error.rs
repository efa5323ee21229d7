//! Crate-wide error type.

use std::fmt;

/// Everything that can go wrong in this crate.
#[derive(Debug)]
pub enum Error {
    /// Two operands have incompatible shapes (matrix product, sum, ...).
    ShapeMismatch {
        expected: (usize, usize),
        got: (usize, usize),
        op: &'static str,
    },
    /// A square-matrix operation was asked of a non-square or singular matrix.
    NotInvertible,
    /// A parameter is outside the range an algorithm supports.
    BadParameter(String),
    /// The LP relaxation is unbounded above.
    Unbounded,
    /// A text file being parsed does not follow the expected format.
    Parse { line: usize, msg: String },
    /// An underlying I/O operation failed.
    Io(std::io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ShapeMismatch { expected, got, op } => write!(
                f,
                "shape mismatch in {op}: expected {}x{}, got {}x{}",
                expected.0, expected.1, got.0, got.1
            ),
            Error::NotInvertible => write!(f, "matrix is not invertible"),
            Error::BadParameter(msg) => write!(f, "bad parameter: {msg}"),
            Error::Unbounded => write!(f, "linear program is unbounded"),
            Error::Parse { line, msg } => write!(f, "parse error at line {line}: {msg}"),
            Error::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}
