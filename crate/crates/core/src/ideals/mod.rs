//! Ideal predicates (essential, sturdy, semiprime, prime), the subspace
//! enumeration oracle over small finite fields, and the least essential ideal.

pub mod certificate;
pub mod lattice;
pub mod predicates;
pub mod socle;

pub use certificate::{Certificate, Method, Witness};
pub use lattice::{check_enumerable, enumerate_ideals, IdealLattice, ENUMERATION_CAP};
pub use predicates::{
    is_essential, is_prime, is_semiprime, is_sturdy, Context, Strategy, DEFAULT_SEED,
};
pub use socle::{minimal_essential_ideal, Socle};
