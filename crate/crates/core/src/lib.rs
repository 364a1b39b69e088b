pub mod error;
pub mod extension;
pub mod ideals;
pub mod io;
pub mod leibniz;
pub mod linalg;
pub mod maximal;
pub mod operators;
pub mod replicate;
pub mod scalar;

pub use error::{Error, Result};
pub use ideals::{Certificate, IdealLattice, Method, Witness};
pub use leibniz::{Ideal, IdealKind, LeibnizAlgebra, Side};
pub use linalg::{Matrix, Subspace};
pub use scalar::{Field, Scalar};
