//! Matrix Lie groups ℝ*, U(1), SU(2), GL(n) and their algebras.

mod expm;
mod group;
mod matrix;

pub use group::{
    exp_map, group_distance, log_map, pauli, AlgebraElement, GroupElement, GroupName, GroupSpec,
    ScalarField,
};
pub use matrix::{CMat, MAX_DIM};
pub use num_complex::Complex64;
