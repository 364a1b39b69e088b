//! Extensions `L ⊆ Q`, the absorption space `_L(q)` and ideal `(L : q)`,
//! and decision procedures for the quotient notions.
//!
//! Every `(L : q)` contains `I* = ∩_i (L : b_i)` over a basis of `Q`, so a
//! single annihilator computation on `I*` settles the universal quantifier
//! whenever it succeeds; otherwise the checks fall back to visiting every
//! line of `Q` (finite fields) or a seeded test set.

pub mod base;
pub mod filter;
pub mod predicates;

pub use base::{Extension, POINT_CAP};
pub use filter::IdealFilter;
pub use predicates::{
    default_filter, is_ideally_absorbed, is_martindale_quotient, is_quotient_algebra, is_weak_quotient,
    QuotientOptions,
};
