//! Exact rational scalars, dense vectors and matrices, and the linear algebra
//! kernel (rank, echelon bases, solves, projections) used by every other module.

mod linalg;
mod matrix;
mod rational;

pub use linalg::{
    image_basis, kernel_basis, project_along, rank, rref, solve, solve_left_fixed, RowSpace,
};
pub use matrix::{Orientation, ParseMatrixError, RMatrix, RVector};
pub use rational::{ParseRationalError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("subspaces do not form a direct sum decomposition")]
    DecompositionNotDirect,
    #[error("matrix has no nonzero left fixed vector")]
    NoFixedVector,
}
