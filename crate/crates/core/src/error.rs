use thiserror::Error;

use crate::graded::Degree;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("shape mismatch: expected {expected:?}, got {got:?}")]
    ShapeMismatch {
        expected: (usize, usize),
        got: (usize, usize),
    },
    #[error("index ({row}, {col}) out of range for size {size}")]
    IndexOutOfRange { row: usize, col: usize, size: usize },
    #[error("grading signatures differ")]
    SignatureMismatch,
    #[error("matrix is not homogeneous of degree {0}")]
    NotHomogeneous(Degree),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("operation requires a family with a defining form, got {0}")]
    WrongFamilyKind(String),
    #[error("degree permutation must fix (0,0) and be a bijection")]
    InvalidPermutation,
    #[error("bracket of basis elements {i} and {j} escapes the span of the basis")]
    NotInSpan { i: usize, j: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
