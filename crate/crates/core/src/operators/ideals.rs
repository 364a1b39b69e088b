use serde::Serialize;

use crate::error::{Error, Result};
use crate::leibniz::LeibnizAlgebra;
use crate::linalg::{Matrix, Subspace};
use crate::operators::algebra::{product_space, stable_closure, to_matrix, to_vector, Generator, OperatorAlgebra};

/// Which multiplications an associative ideal absorbs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AssocSide {
    Left,
    Right,
    TwoSided,
}

/// A subspace of an operator algebra closed under the declared multiplications.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssocIdeal {
    pub space: Subspace,
    pub side: AssocSide,
}

impl AssocIdeal {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    /// Re-checks closure under the parent basis.
    pub fn verify(&self, parent: &OperatorAlgebra) -> bool {
        if !parent.contains_space(&self.space) {
            return false;
        }
        let n = parent.ambient_dim();
        let p = parent.space();
        let left = matches!(self.side, AssocSide::Left | AssocSide::TwoSided);
        let right = matches!(self.side, AssocSide::Right | AssocSide::TwoSided);
        (!left || product_space(n, p, &self.space).is_subspace_of(&self.space))
            && (!right || product_space(n, &self.space, p).is_subspace_of(&self.space))
    }
}

/// The ideal of `parent` generated by the operator space `x`.
pub fn ideal_closure(parent: &OperatorAlgebra, x: &Subspace, side: AssocSide) -> AssocIdeal {
    let basis = parent.basis();
    let none: &[Matrix] = &[];
    let (left, right) = match side {
        AssocSide::Left => (basis.as_slice(), none),
        AssocSide::Right => (none, basis.as_slice()),
        AssocSide::TwoSided => (basis.as_slice(), basis.as_slice()),
    };
    AssocIdeal {
        space: stable_closure(parent.ambient_dim(), x.clone(), left, right),
        side,
    }
}

/// The two-sided ideal of `parent` generated by `sub`, after checking that
/// the left, right and two-sided closures coincide.
pub fn assoc_ideal_generated(parent: &OperatorAlgebra, sub: &OperatorAlgebra) -> Result<AssocIdeal> {
    if sub.ambient_dim() != parent.ambient_dim() || !parent.contains_space(sub.space()) {
        return Err(Error::Precondition("generating space must lie in the parent algebra".into()));
    }
    let left = ideal_closure(parent, sub.space(), AssocSide::Left);
    let right = ideal_closure(parent, sub.space(), AssocSide::Right);
    let both = ideal_closure(parent, sub.space(), AssocSide::TwoSided);
    if left.space != both.space || right.space != both.space {
        return Err(Error::InternalFault(
            "left, right and two-sided closures of the generated ideal differ".into(),
        ));
    }
    Ok(both)
}

/// `ran_A(X) = {a ∈ A : X a = 0}` (`Right`) or `lan_A(X) = {a : a X = 0}` (`Left`).
pub fn assoc_annihilator(a: &OperatorAlgebra, x: &Subspace, side: AssocSide) -> Result<Subspace> {
    let n = a.ambient_dim();
    let f = a.field();
    if side == AssocSide::TwoSided {
        let r = assoc_annihilator(a, x, AssocSide::Right)?;
        let l = assoc_annihilator(a, x, AssocSide::Left)?;
        return Ok(r.intersect(&l));
    }
    let basis = a.basis();
    let xs: Vec<Matrix> = x.basis_vectors().iter().map(|v| to_matrix(f, n, v)).collect();
    let k = basis.len();
    let mut rows = Vec::new();
    for xm in &xs {
        let prods: Vec<Vec<_>> = basis
            .iter()
            .map(|b| match side {
                AssocSide::Right => to_vector(&xm.mul(b)),
                _ => to_vector(&b.mul(xm)),
            })
            .collect();
        for r in 0..n * n {
            rows.push((0..k).map(|i| prods[i][r].clone()).collect());
        }
    }
    let coeffs = Matrix::from_rows(f, k, rows)?.kernel();
    let ann = Subspace::from_vectors(
        f,
        n * n,
        coeffs.basis_vectors().iter().map(|c| a.space().combination(c)),
    );
    let closed = match side {
        AssocSide::Right => product_space(n, &ann, a.space()).is_subspace_of(&ann),
        _ => product_space(n, a.space(), &ann).is_subspace_of(&ann),
    };
    if !closed {
        return Err(Error::InternalFault("annihilator is not a one-sided ideal".into()));
    }
    Ok(ann)
}

/// `A_0 = {μ ∈ A : μ(L) ⊆ L}`.
pub fn stabilizer_subalgebra(aq: &OperatorAlgebra, l: &Subspace) -> Result<OperatorAlgebra> {
    let n = aq.ambient_dim();
    let f = aq.field();
    if l.ambient() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: l.ambient(),
        });
    }
    let p = l.membership_matrix();
    let basis = aq.basis();
    let k = basis.len();
    let mut rows = Vec::new();
    if p.rows() > 0 {
        for x in l.basis_vectors() {
            let images: Vec<Vec<_>> = basis.iter().map(|b| p.apply(&b.apply(&x))).collect();
            for r in 0..p.rows() {
                rows.push((0..k).map(|i| images[i][r].clone()).collect());
            }
        }
    }
    let coeffs = Matrix::from_rows(f, k, rows)?.kernel();
    let space = Subspace::from_vectors(
        f,
        n * n,
        coeffs.basis_vectors().iter().map(|c| aq.space().combination(c)),
    );
    let a0 = OperatorAlgebra::from_space(n, space)
        .map_err(|_| Error::InternalFault("stabilizer is not closed under composition".into()))?
        .mark_outside(aq.is_outside_hypotheses());
    for (g, op) in aq.generator_matrices() {
        let inside = match g {
            Generator::Right(x) | Generator::Left(x) => l.contains(x),
            Generator::Identity => true,
        };
        if inside && !a0.contains(op) {
            return Err(Error::InternalFault("A_Q(L) is not inside A_0".into()));
        }
    }
    Ok(a0)
}

/// `Ĩ`: the ideal of `A_Q(L)` generated by `A_Q(I)`.
pub fn tilde_ideal(q: &LeibnizAlgebra, l: &Subspace, i: &Subspace, allow_nonsymmetric: bool) -> Result<AssocIdeal> {
    let aql = OperatorAlgebra::relative(q, l, allow_nonsymmetric)?;
    let aqi = OperatorAlgebra::relative(q, i, allow_nonsymmetric)?;
    assoc_ideal_generated(&aql, &aqi)
}

/// `A_0·Ĩ + Ĩ`, a left ideal of `A_0`.
pub fn absorbing_left_ideal(a0: &OperatorAlgebra, tilde: &AssocIdeal) -> Result<AssocIdeal> {
    let n = a0.ambient_dim();
    let space = product_space(n, a0.space(), &tilde.space).sum(&tilde.space);
    let j = AssocIdeal {
        space,
        side: AssocSide::Left,
    };
    if !j.verify(a0) {
        return Err(Error::Precondition("Ĩ must lie in A_0".into()));
    }
    Ok(j)
}
