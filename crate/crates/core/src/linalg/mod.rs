//! Exact linear algebra: dense matrices, canonical subspaces, and the
//! kernel/intersection/preimage toolkit every other module reduces to.

pub mod matrix;
pub mod poly;
pub mod subspace;
pub mod vector;

pub use matrix::Matrix;
pub use subspace::{intersect, joint_kernel, kernel, preimage, Subspace};
