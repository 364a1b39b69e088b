use serde::Serialize;

use crate::error::{Error, Result};
use crate::leibniz::{Ideal, LeibnizAlgebra};
use crate::linalg::{vector, Matrix, Subspace};
use crate::scalar::Scalar;

/// A linear map `δ : I → L` with `δ([x, y]) = [δ(x), y] + [x, δ(y)]`.
///
/// `matrix` has one column per canonical basis vector of `I`, holding its
/// image in `L`-coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartialDerivation {
    pub domain: Ideal,
    pub matrix: Matrix,
}

impl PartialDerivation {
    /// Image of the element of `I` with the given `I`-coordinates.
    pub fn apply_coords(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(coords)
    }

    /// Image of an element of `L` lying in `I`.
    pub fn apply(&self, x: &[Scalar]) -> Option<Vec<Scalar>> {
        self.domain.space().coords(x).map(|c| self.matrix.apply(&c))
    }

    /// Checks the defining identity on all basis pairs of the domain.
    pub fn verify(&self, alg: &LeibnizAlgebra) -> bool {
        let basis = self.domain.space().basis_vectors();
        basis.iter().enumerate().all(|(a, x)| {
            basis.iter().enumerate().all(|(b, y)| {
                let Some(lhs) = self.apply(&alg.bracket(x, y)) else {
                    return false;
                };
                let dx = self.matrix.column(a);
                let dy = self.matrix.column(b);
                lhs == vector::add(&alg.bracket(&dx, y), &alg.bracket(x, &dy))
            })
        })
    }
}

/// Unknowns ordered row-major over (basis of `I`) × (basis of `L`):
/// entry `c·n + k` is coordinate `k` of `δ(u_c)`.
pub fn flatten_map(map: &Matrix) -> Vec<Scalar> {
    map.transpose().flatten()
}

/// Inverse of [`flatten_map`] for a map out of an `m`-dimensional domain.
pub fn unflatten_map(field: crate::Field, n: usize, m: usize, flat: &[Scalar]) -> Matrix {
    Matrix::from_flat(field, m, n, flat.to_vec()).transpose()
}

/// The solution space `PDer(I, L)` together with its deterministic basis.
#[derive(Clone, Debug)]
pub struct PderSpace {
    domain: Ideal,
    solutions: Subspace,
    basis: Vec<PartialDerivation>,
}

impl PderSpace {
    pub fn solve(alg: &LeibnizAlgebra, domain: &Ideal) -> Result<PderSpace> {
        if !domain.is_two_sided() || !domain.verify(alg) {
            return Err(Error::NotClosed("partial derivations need a two-sided ideal".into()));
        }
        let f = alg.field();
        let n = alg.dim();
        let space = domain.space();
        let m = space.dim();
        let basis = space.basis_vectors();
        let unknowns = m * n;
        let mut rows = Vec::with_capacity(m * m * n);
        for (a, x) in basis.iter().enumerate() {
            let lx = alg.left_operator(x);
            for (b, y) in basis.iter().enumerate() {
                let ry = alg.right_operator(y);
                let w = space
                    .coords(&alg.bracket(x, y))
                    .ok_or_else(|| Error::InternalFault("ideal not closed under its own bracket".into()))?;
                for r in 0..n {
                    let mut row = vec![f.zero(); unknowns];
                    for (c, wc) in w.iter().enumerate() {
                        row[c * n + r] += wc;
                    }
                    for k in 0..n {
                        row[a * n + k] -= ry.get(r, k);
                        row[b * n + k] -= lx.get(r, k);
                    }
                    if row.iter().any(|s| !s.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let system = Matrix::from_rows(f, unknowns, rows)?;
        let solutions = system.kernel();
        let basis = solutions
            .basis_vectors()
            .iter()
            .map(|v| PartialDerivation {
                domain: domain.clone(),
                matrix: unflatten_map(f, n, m, v),
            })
            .collect();
        Ok(PderSpace {
            domain: domain.clone(),
            solutions,
            basis,
        })
    }

    pub fn domain(&self) -> &Ideal {
        &self.domain
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[PartialDerivation] {
        &self.basis
    }

    /// Flattened solutions as a subspace of `Hom(I, L)`.
    pub fn solutions(&self) -> &Subspace {
        &self.solutions
    }

    /// Coordinates of a map `I → L` in the basis, or `None` when it is not
    /// a partial derivation.
    pub fn coords(&self, map: &Matrix) -> Option<Vec<Scalar>> {
        self.solutions.coords(&flatten_map(map))
    }

    pub fn combination(&self, coords: &[Scalar]) -> Matrix {
        let flat = self.solutions.combination(coords);
        let n = self.solutions.ambient() / self.domain.dim().max(1);
        unflatten_map(self.solutions.field(), n, self.domain.dim(), &flat)
    }
}

/// Basis of `PDer(I, L)`, the RREF kernel basis of the Leibniz constraints.
pub fn pder_space(alg: &LeibnizAlgebra, domain: &Ideal) -> Result<Vec<PartialDerivation>> {
    Ok(PderSpace::solve(alg, domain)?.basis)
}

/// `R_x` restricted to `I`, as a map `I → L`.
pub fn restricted_right(alg: &LeibnizAlgebra, domain: &Subspace, x: &[Scalar]) -> Matrix {
    let r = alg.right_operator(x);
    let cols: Vec<Vec<Scalar>> = domain.basis_vectors().iter().map(|u| r.apply(u)).collect();
    Matrix::from_columns(alg.field(), alg.dim(), &cols)
}
