//! Exact dense linear algebra over the rationals and prime fields.

mod field;
mod matrix;
pub mod poly;
mod scalar;
mod span;

pub use field::Field;
pub use matrix::{Matrix, Rref};
pub use scalar::{ParseScalarError, Scalar};
pub use span::Span;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("unsupported field {0}")]
    BadField(String),
    #[error("scalar {0} has no image in F_{1}")]
    NotInField(String, u32),
    #[error("shape error: {0}")]
    Shape(String),
}
