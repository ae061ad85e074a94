//! Error type shared across the crate.

use std::error;
use std::fmt;

/// Failure modes of the engine's fallible operations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The input lies outside the mathematical domain of the operation.
    /// The message names the violated constraint.
    Domain(String),
    /// A series did not reach the requested tolerance within the term
    /// budget; `bound` is the last error bound that was established.
    Accuracy { message: String, bound: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Accuracy { message, bound } => {
                write!(f, "accuracy error: {message} (last bound {bound:e})")
            }
        }
    }
}

impl error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
