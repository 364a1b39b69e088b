//! Partial derivations and the maximal algebra of quotients.
//!
//! For semiprime `L` with minimal essential ideal `E`, every essential ideal
//! contains `E` and `E² = E`, so classes of partial derivations are
//! determined by their restriction to `E` and `Q_m(L)` is `PDer(E, L)`.

pub mod passman;
pub mod pder;
pub mod qmax;

pub use passman::{passman_check, DomainCheck, PassmanOptions, PassmanReport};
pub use pder::{pder_space, PartialDerivation, PderSpace};
pub use qmax::{build_qmax, embed_psi, MaximalQuotients, QmaxOptions};
