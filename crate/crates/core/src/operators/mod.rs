//! Associative algebras of multiplication operators, realized as spaces of
//! matrices acting on columns: `A(Q)`, `A_Q(L)`, `M(Q)`, the stabilizer
//! `A_0` of `L`, ideals `Ĩ`, annihilators, and density.
//!
//! The symmetric Leibniz hypothesis is enforced on entry; an explicit
//! override marks results as outside those hypotheses.

pub mod algebra;
pub mod ideals;
pub mod quotients;
pub mod rewrite;

pub use algebra::{Generator, OperatorAlgebra};
pub use ideals::{
    absorbing_left_ideal, assoc_annihilator, assoc_ideal_generated, ideal_closure, stabilizer_subalgebra,
    tilde_ideal, AssocIdeal, AssocSide,
};
pub use quotients::{
    absorbed_ideal, is_assoc_semiprime, is_dense_extension, is_left_quotient_algebra, is_multiplicatively_semiprime,
    is_strong_right_ideally_absorbed, l_ann_in_mq, vanishing_on,
};
pub use rewrite::{check_rewrite_identity, rewrite_holds, Letter, RewriteReport};
