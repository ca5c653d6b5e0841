//! Exact scalars, dense matrices and the closed-form matrices used throughout.

mod matrix;
mod scalar;
mod special;

pub use matrix::Matrix;
pub use scalar::{lift, sum, ExactScalar};
pub use special::{
    binomial, eta_vector, lambda_matrix, lambda_right_inverse, omega_inverse, omega_matrix,
    psi_inverse, psi_matrix, MAX_CLOSED_FORM,
};
