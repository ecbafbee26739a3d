//! Exact arithmetic over the field Q(sqrt 2) and dense linear algebra on top of it.

mod matrix;
mod scalar;

pub use matrix::{nullspace, rref, span_dim, ExactMatrix, SpanSolver};
pub use scalar::{scalar_arith, Rational, Scalar, ScalarOp};
