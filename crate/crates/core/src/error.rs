use thiserror::Error;

use crate::report::Report;
use crate::scalar::Field;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("modulus {0} not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the supported range")]
    ModulusTooLarge(u64),
    #[error("malformed scalar `{0}`")]
    BadScalar(String),
    #[error("matrix is singular: {0}")]
    Singular(String),
    #[error("{what} requires an invertible 2, unavailable in characteristic 2")]
    CharacteristicTwo { what: &'static str },
    #[error("axioms violated for {}", .0.subject)]
    Axioms(Box<Report>),
    #[error("precondition failed for {}", .0.subject)]
    Precondition(Box<Report>),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    /// The attached report, for errors raised by a failed gate.
    pub fn report(&self) -> Option<&Report> {
        match self {
            Error::Axioms(r) | Error::Precondition(r) => Some(r),
            _ => None,
        }
    }
}
