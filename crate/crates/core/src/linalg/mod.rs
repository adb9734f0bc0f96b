//! Dense exact linear algebra over the Gaussian rationals.

mod elimination;
mod matrix;
mod vector;

pub use elimination::{gram_schmidt, inverse, kernel_basis, rank, solve, BasisFrame};
pub use matrix::{ExactMatrix, MatrixDump};
pub use vector::{ExactVector, VectorDump};
