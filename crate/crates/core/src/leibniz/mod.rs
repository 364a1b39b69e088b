//! Leibniz algebras given by structure constants.
//!
//! Operator convention: `R_x(u) = [u, x]` and `L_y(u) = [y, u]`. Matrices act
//! on column vectors, so column `j` of an operator is the image of `b_j` and
//! composition is the matrix product.

pub mod algebra;
pub mod catalog;
pub mod ideal;
pub mod tables;

pub use algebra::{IdentityReport, LeibnizAlgebra, Side, Violation};
pub use ideal::{ClosureRecord, ClosureWitness, Ideal, IdealKind};
