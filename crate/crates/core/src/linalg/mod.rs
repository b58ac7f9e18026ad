//! Exact rational substrate: scalars, dense matrices, sparse homogeneous
//! systems, polynomials and joint eigenspace decomposition.

mod eigen;
mod matrix;
pub(crate) mod modp;
mod poly;
mod rational;
mod sparse;

pub use eigen::{simultaneous_eigenspaces, JointEigenspace};
pub use matrix::{ldlt_signature, solve_linear, Inertia, Matrix, SolutionSpace};
pub use poly::MultiPoly;
pub use rational::{frac, int, Rational, Weight};
pub(crate) use rational::next_permutation;
pub use sparse::SparseSystem;
