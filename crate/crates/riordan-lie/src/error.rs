//! Crate-wide error type.
//!
//! Three coarse categories, chosen to match the CLI exit-code contract:
//! parse/validation errors (exit 2), domain-precondition violations
//! (exit 3) and internal consistency failures (exit 4). The latter are
//! reserved for situations that falsify an invariant the mathematics
//! guarantees, e.g. a polynomial-diagonal fit that fails verification.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Domain(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn parse(msg: impl Into<String>) -> Error {
        Error::Parse(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Error {
        Error::Domain(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Error {
        Error::Internal(msg.into())
    }

    /// Process exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::Domain(_) => 3,
            Error::Internal(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
