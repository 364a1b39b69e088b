use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ideals::lattice::points_under_cap;
use crate::ideals::predicates::RANDOM_SAMPLES;
use crate::leibniz::{Ideal, LeibnizAlgebra};
use crate::linalg::{joint_kernel, vector, Matrix, Subspace};
use crate::scalar::Scalar;

/// Largest number of projective points visited when a check is made
/// exhaustive over a finite field.
pub const POINT_CAP: usize = 20_000;

/// A subalgebra `L` of a Leibniz algebra `Q`.
#[derive(Clone, Debug)]
pub struct Extension {
    big: LeibnizAlgebra,
    small: Subspace,
    small_alg: LeibnizAlgebra,
    /// `small.basis` as columns: maps `L`-coordinates into `Q`.
    embedding: Matrix,
    complement: Vec<Vec<Scalar>>,
}

impl Extension {
    /// Fails with `NotClosed` unless `[L, L] ⊆ L`.
    pub fn new(big: LeibnizAlgebra, small: Subspace) -> Result<Extension> {
        if small.ambient() != big.dim() {
            return Err(Error::DimensionMismatch {
                expected: big.dim(),
                found: small.ambient(),
            });
        }
        if small.field() != big.field() {
            return Err(Error::FieldMismatch(big.field(), small.field()));
        }
        let name = format!("{}|L", big.name());
        let small_alg = big.subalgebra(&small, name)?;
        Ok(Extension {
            embedding: small.basis_columns(),
            complement: small.complement_basis(),
            big,
            small,
            small_alg,
        })
    }

    /// `L = Q`.
    pub fn trivial(alg: LeibnizAlgebra) -> Extension {
        let full = alg.full();
        Extension::new(alg, full).expect("an algebra is a subalgebra of itself")
    }

    pub fn big(&self) -> &LeibnizAlgebra {
        &self.big
    }

    /// `L` as a subspace of `Q`.
    pub fn small(&self) -> &Subspace {
        &self.small
    }

    /// `L` as an algebra in the canonical basis of the subspace.
    pub fn small_algebra(&self) -> &LeibnizAlgebra {
        &self.small_alg
    }

    pub fn complement(&self) -> &[Vec<Scalar>] {
        &self.complement
    }

    pub fn embedding(&self) -> &Matrix {
        &self.embedding
    }

    /// `L`-coordinates to a vector of `Q`.
    pub fn embed(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.small.combination(coords)
    }

    /// A subspace of `L` (in `L`-coordinates) as a subspace of `Q`.
    pub fn embed_subspace(&self, s: &Subspace) -> Subspace {
        self.big.span(s.basis_vectors().iter().map(|c| self.embed(c)).collect())
    }

    /// A subspace of `Q` contained in `L`, in `L`-coordinates.
    pub fn restrict_subspace(&self, s: &Subspace) -> Option<Subspace> {
        let coords: Option<Vec<_>> = s.basis_vectors().iter().map(|v| self.small.coords(v)).collect();
        Some(self.small_alg.span(coords?))
    }

    fn l_basis(&self) -> Vec<Vec<Scalar>> {
        self.small.basis_vectors()
    }

    /// `_L(q)`: the least subspace containing `q` and stable under `R_x`,
    /// `L_x` for `x ∈ L`.
    pub fn lq_span(&self, q: &[Scalar]) -> Subspace {
        let mut ops = Vec::new();
        for x in self.l_basis() {
            ops.push(self.big.right_operator(&x));
            ops.push(self.big.left_operator(&x));
        }
        let mut current = self.big.span(vec![q.to_vec()]);
        let mut frontier = current.basis_vectors();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for u in &frontier {
                for t in &ops {
                    let w = t.apply(u);
                    if !current.contains(&w) {
                        current = current.sum(&self.big.span(vec![w.clone()]));
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        current
    }

    /// `{x ∈ L : [x, S] ⊆ L and [S, x] ⊆ L}` in `L`-coordinates.
    pub fn absorbing_subspace(&self, s: &Subspace) -> Subspace {
        let p = self.small.membership_matrix();
        let f = self.big.field();
        let m = self.small.dim();
        if p.rows() == 0 {
            return Subspace::full(f, m);
        }
        let mut maps = Vec::new();
        for v in s.basis_vectors() {
            // c ↦ [Σ c_i l_i, v] and c ↦ [v, Σ c_i l_i]
            let right = self.big.right_operator(&v).mul(&self.embedding);
            let left = self.big.left_operator(&v).mul(&self.embedding);
            maps.push(p.mul(&right));
            maps.push(p.mul(&left));
        }
        joint_kernel(f, m, &maps)
    }

    /// `(L : q) = {x ∈ L : [x, _L(q)] ⊆ L, [_L(q), x] ⊆ L}`, an ideal of `L`.
    pub fn quotient_ideal(&self, q: &[Scalar]) -> Result<Ideal> {
        let space = self.absorbing_subspace(&self.lq_span(q));
        let ideal = Ideal::two_sided(&self.small_alg, space)
            .map_err(|e| Error::InternalFault(format!("(L:q) is not an ideal of L: {e}")))?;
        if self.small.contains(q) && !ideal.space().is_full() {
            return Err(Error::InternalFault("(L:q) differs from L for q in L".into()));
        }
        Ok(ideal)
    }

    /// `I* = ∩_i (L : b_i)` over the standard basis of `Q`; contained in
    /// `(L : q)` for every `q`.
    pub fn common_quotient_ideal(&self) -> Result<Ideal> {
        let mut acc = Subspace::full(self.big.field(), self.small.dim());
        for i in 0..self.big.dim() {
            acc = acc.intersect(self.quotient_ideal(&self.big.unit(i))?.space());
        }
        Ideal::two_sided(&self.small_alg, acc)
            .map_err(|e| Error::InternalFault(format!("I* is not an ideal of L: {e}")))
    }

    /// `Ann_Q(X)` for `X ⊆ L` given in `L`-coordinates.
    pub fn ann_in_big(&self, x: &Subspace) -> Subspace {
        self.big.ann(&self.embed_subspace(x))
    }

    /// `{q : [q, X] = 0}` for `X ⊆ L` in `L`-coordinates.
    pub fn lan_in_big(&self, x: &Subspace) -> Subspace {
        self.big.lan(&self.embed_subspace(x))
    }

    /// `{q : [X, q] = 0}` for `X ⊆ L` in `L`-coordinates.
    pub fn ran_in_big(&self, x: &Subspace) -> Subspace {
        self.big.ran(&self.embed_subspace(x))
    }

    /// Basis of `Q`, a basis of a complement of `L`, and seeded random vectors.
    pub fn test_set(&self, seed: u64) -> Vec<Vec<Scalar>> {
        let mut out: Vec<Vec<Scalar>> = (0..self.big.dim()).map(|i| self.big.unit(i)).collect();
        out.extend(self.complement.iter().cloned());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..RANDOM_SAMPLES {
            out.push(vector::random(self.big.field(), self.big.dim(), &mut rng));
        }
        out.retain(|v| !vector::is_zero(v));
        out
    }

    /// Every line of `Q` when the field is finite and small enough,
    /// together with `true`; otherwise the seeded test set and `false`.
    pub fn points(&self, seed: u64) -> (Vec<Vec<Scalar>>, bool) {
        if let Some(pts) = points_under_cap(self.big.field(), self.big.dim(), POINT_CAP) {
            return (pts, true);
        }
        (self.test_set(seed), false)
    }
}
