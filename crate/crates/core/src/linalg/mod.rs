//! Exact dense and sparse linear algebra over the rationals and prime fields.

mod matrix;
mod scalar;
pub mod sparse;

pub use matrix::{Echelon, Matrix};
pub use scalar::{is_prime, Field, Scalar, CERT_PRIME};
pub use sparse::{SparseEchelon, SparseVec};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("scalars from different fields were combined")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a supported prime")]
    NotPrime(u64),
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
}
