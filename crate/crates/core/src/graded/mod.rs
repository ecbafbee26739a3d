//! Z2 x Z2 degrees, grading signatures and graded matrices with the graded bracket
//! and graded transpose.

mod degree;
mod matrix;
mod signature;

pub use degree::{degree_sign, Degree, DegreePermutation, SignRule};
pub use matrix::{
    decompose, graded_bracket, graded_product, graded_transpose, trace, GradedMatrix, HomogeneousDecomposition,
};
pub use signature::{permute_grading, GradingSignature};
