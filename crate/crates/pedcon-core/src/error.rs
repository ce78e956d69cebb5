//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the series, arithmetic, and verification layers.
///
/// The CLI maps `Error` to exit code 2 (precondition / usage error); a
/// *refuted* verification is not an error but a reported outcome.
#[derive(Debug, Error)]
pub enum Error {
    /// Two series with incompatible coefficient rings were combined.
    #[error("modulus mismatch: {0}")]
    ModulusMismatch(String),

    /// A series inversion was attempted on a non-unit constant term.
    #[error("constant term is not a unit: {0}")]
    NonUnitConstant(String),

    /// A structural precondition on the inputs does not hold.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The request exceeds a configured memory or runtime budget.
    #[error("budget exceeded: {0}")]
    Budget(String),

    /// Malformed textual series data.
    #[error("parse error: {0}")]
    Parse(String),

    /// Underlying I/O failure (series file read/write).
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
