use serde::Serialize;

use crate::error::{Error, Result};
use crate::leibniz::algebra::{LeibnizAlgebra, Side};
use crate::linalg::{vector, Subspace};
use crate::scalar::Scalar;

/// Which multiplications an ideal absorbs. A right ideal `H` satisfies
/// `[H, L] ⊆ H`; a left ideal satisfies `[L, H] ⊆ H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealKind {
    Left,
    Right,
    TwoSided,
}

impl IdealKind {
    pub(crate) fn needs_right(self) -> bool {
        matches!(self, IdealKind::Right | IdealKind::TwoSided)
    }

    pub(crate) fn needs_left(self) -> bool {
        matches!(self, IdealKind::Left | IdealKind::TwoSided)
    }
}

/// One closure fact: the product of ideal basis vector `generator` with
/// algebra basis vector `basis` (on `side`) equals the combination
/// `coords` of the ideal basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ClosureRecord {
    pub generator: usize,
    pub basis: usize,
    /// `Right` records `[u, b]`, `Left` records `[b, u]`.
    pub side: Side,
    pub coords: Vec<Scalar>,
}

/// Every product needed to certify closure, with its coordinates.
/// Checking the witness needs only brackets and linear combinations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct ClosureWitness {
    pub records: Vec<ClosureRecord>,
}

impl ClosureWitness {
    pub fn verify(&self, alg: &LeibnizAlgebra, space: &Subspace, kind: IdealKind) -> bool {
        let expected = space.dim()
            * alg.dim()
            * (usize::from(kind.needs_left()) + usize::from(kind.needs_right()));
        if self.records.len() != expected {
            return false;
        }
        let basis = space.basis_vectors();
        self.records.iter().all(|r| {
            let b = alg.unit(r.basis);
            let u = &basis[r.generator];
            let prod = match r.side {
                Side::Right => alg.bracket(u, &b),
                Side::Left => alg.bracket(&b, u),
                Side::Both => return false,
            };
            r.coords.len() == basis.len()
                && vector::combine(alg.field(), alg.dim(), &r.coords, &basis) == prod
        })
    }
}

/// A subspace of an algebra that is closed under the multiplications of
/// its kind, carrying the coordinates that prove it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Ideal {
    space: Subspace,
    kind: IdealKind,
    #[serde(skip)]
    witness: ClosureWitness,
}

impl Ideal {
    /// Checks closure of `space` and records a witness; fails with the
    /// first product that leaves the subspace.
    pub fn new(alg: &LeibnizAlgebra, space: Subspace, kind: IdealKind) -> Result<Ideal> {
        if space.ambient() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: space.ambient(),
            });
        }
        let mut records = Vec::new();
        for (g, u) in space.basis_vectors().iter().enumerate() {
            for k in 0..alg.dim() {
                let b = alg.unit(k);
                let mut sides = Vec::new();
                if kind.needs_right() {
                    sides.push((Side::Right, alg.bracket(u, &b)));
                }
                if kind.needs_left() {
                    sides.push((Side::Left, alg.bracket(&b, u)));
                }
                for (side, prod) in sides {
                    let coords = space.coords(&prod).ok_or_else(|| {
                        Error::NotClosed(format!(
                            "product of ideal basis vector {g} with b{k} on the {side:?} side leaves the subspace"
                        ))
                    })?;
                    records.push(ClosureRecord {
                        generator: g,
                        basis: k,
                        side,
                        coords,
                    });
                }
            }
        }
        Ok(Ideal {
            space,
            kind,
            witness: ClosureWitness { records },
        })
    }

    pub fn two_sided(alg: &LeibnizAlgebra, space: Subspace) -> Result<Ideal> {
        Ideal::new(alg, space, IdealKind::TwoSided)
    }

    pub fn zero(alg: &LeibnizAlgebra) -> Ideal {
        Ideal::two_sided(alg, alg.zero_subspace()).expect("zero is an ideal")
    }

    pub fn whole(alg: &LeibnizAlgebra) -> Ideal {
        Ideal::two_sided(alg, alg.full()).expect("the algebra is an ideal of itself")
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn into_space(self) -> Subspace {
        self.space
    }

    pub fn kind(&self) -> IdealKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn witness(&self) -> &ClosureWitness {
        &self.witness
    }

    /// Re-checks closure from the stored witness alone.
    pub fn verify(&self, alg: &LeibnizAlgebra) -> bool {
        self.witness.verify(alg, &self.space, self.kind)
    }

    pub fn is_two_sided(&self) -> bool {
        self.kind == IdealKind::TwoSided
    }
}
