use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::leibniz::LeibnizAlgebra;
use crate::linalg::{vector, Matrix};
use crate::scalar::Scalar;

/// A multiplication operator `R_x` or `L_x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Letter {
    Right(Vec<Scalar>),
    Left(Vec<Scalar>),
}

impl Letter {
    pub fn matrix(&self, q: &LeibnizAlgebra) -> Matrix {
        match self {
            Letter::Right(x) => q.right_operator(x),
            Letter::Left(x) => q.left_operator(x),
        }
    }

    /// The correction `δ` with `ξη = ηξ + δ`.
    pub fn commutator_with(&self, eta: &Letter, q: &LeibnizAlgebra) -> Matrix {
        match (self, eta) {
            (Letter::Right(x), Letter::Right(y)) => q.right_operator(&q.bracket(y, x)),
            (Letter::Right(x), Letter::Left(y)) => q.left_operator(&q.bracket(y, x)),
            (Letter::Left(x), Letter::Right(y)) => q.right_operator(&q.bracket(x, y)),
            (Letter::Left(x), Letter::Left(y)) => q.left_operator(&q.bracket(x, y)),
        }
    }
}

/// Outcome of checking the word rewriting identity on sampled words.
#[derive(Clone, Debug, Default, Serialize)]
pub struct RewriteReport {
    pub words: usize,
    pub failures: usize,
    pub first_failure: Option<(Vec<Letter>, Letter)>,
}

fn product(q: &LeibnizAlgebra, mats: impl IntoIterator<Item = Matrix>) -> Matrix {
    mats.into_iter()
        .fold(Matrix::identity(q.field(), q.dim()), |acc, m| acc.mul(&m))
}

/// Whether `ξ_1⋯ξ_n η = η ξ_1⋯ξ_n + Σ_i ξ_1⋯ξ_{i−1} δ_i ξ_{i+1}⋯ξ_n` holds
/// as a matrix equality, with `δ_i` read off the four commutation rules.
pub fn rewrite_holds(q: &LeibnizAlgebra, word: &[Letter], eta: &Letter) -> bool {
    let xi: Vec<Matrix> = word.iter().map(|l| l.matrix(q)).collect();
    let e = eta.matrix(q);
    let lhs = product(q, xi.iter().cloned().chain(std::iter::once(e.clone())));
    let mut rhs = e.mul(&product(q, xi.iter().cloned()));
    for (i, letter) in word.iter().enumerate() {
        let delta = letter.commutator_with(eta, q);
        let term = product(
            q,
            xi[..i]
                .iter()
                .cloned()
                .chain(std::iter::once(delta))
                .chain(xi[i + 1..].iter().cloned()),
        );
        rhs = rhs.add(&term);
    }
    lhs == rhs
}

/// Checks the rewriting identity on `samples` seeded words of length at
/// most `max_len` over random elements. Rejects non-symmetric algebras
/// unless `allow_nonsymmetric` is set.
pub fn check_rewrite_identity(
    q: &LeibnizAlgebra,
    samples: usize,
    max_len: usize,
    seed: u64,
    allow_nonsymmetric: bool,
) -> Result<RewriteReport> {
    if !q.is_symmetric() && !allow_nonsymmetric {
        return Err(Error::NotSymmetric);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = q.field();
    let letter = |rng: &mut ChaCha8Rng| {
        let x = vector::random(f, q.dim(), rng);
        if rng.gen_bool(0.5) {
            Letter::Right(x)
        } else {
            Letter::Left(x)
        }
    };
    let mut report = RewriteReport::default();
    for _ in 0..samples {
        let len = rng.gen_range(1..=max_len.max(1));
        let word: Vec<Letter> = (0..len).map(|_| letter(&mut rng)).collect();
        let eta = letter(&mut rng);
        report.words += 1;
        if !rewrite_holds(q, &word, &eta) {
            report.failures += 1;
            report.first_failure.get_or_insert((word, eta));
        }
    }
    Ok(report)
}
