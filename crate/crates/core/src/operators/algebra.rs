use serde::Serialize;

use crate::error::{Error, Result};
use crate::leibniz::LeibnizAlgebra;
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{Field, Scalar};

/// Where a generator of an operator algebra came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "element")]
pub enum Generator {
    Right(Vec<Scalar>),
    Left(Vec<Scalar>),
    Identity,
}

/// A composition-closed space of `n×n` matrices acting on an algebra.
///
/// Matrices are stored flattened row-major as vectors of length `n²`, so
/// the basis is canonical (the RREF of the flattenings).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OperatorAlgebra {
    n: usize,
    space: Subspace,
    unital: bool,
    generators: Vec<Generator>,
    #[serde(skip)]
    generator_ops: Vec<Matrix>,
    /// Built from a non-symmetric algebra through an explicit override.
    outside_hypotheses: bool,
}

pub fn to_vector(m: &Matrix) -> Vec<Scalar> {
    m.flatten()
}

pub fn to_matrix(field: Field, n: usize, v: &[Scalar]) -> Matrix {
    Matrix::from_flat(field, n, n, v.to_vec())
}

/// `span{x·y : x ∈ X, y ∈ Y}` for operator spaces.
pub fn product_space(n: usize, x: &Subspace, y: &Subspace) -> Subspace {
    let f = x.field();
    let ys: Vec<Matrix> = y.basis_vectors().iter().map(|v| to_matrix(f, n, v)).collect();
    let mut out = Vec::with_capacity(x.dim() * y.dim());
    for a in x.basis_vectors() {
        let a = to_matrix(f, n, &a);
        for b in &ys {
            out.push(to_vector(&a.mul(b)));
        }
    }
    Subspace::from_vectors(f, n * n, out)
}

/// Least space containing `start` and stable under left multiplication by
/// every matrix of `left` and right multiplication by every matrix of `right`.
pub fn stable_closure(n: usize, start: Subspace, left: &[Matrix], right: &[Matrix]) -> Subspace {
    let f = start.field();
    let mut current = start;
    loop {
        let mut vectors = current.basis_vectors();
        let basis: Vec<Matrix> = vectors.iter().map(|v| to_matrix(f, n, v)).collect();
        for m in &basis {
            vectors.extend(left.iter().map(|g| to_vector(&g.mul(m))));
            vectors.extend(right.iter().map(|g| to_vector(&m.mul(g))));
        }
        let next = Subspace::from_vectors(f, n * n, vectors);
        if next.dim() == current.dim() {
            return current;
        }
        current = next;
    }
}

impl OperatorAlgebra {
    /// The associative algebra generated by `R_x, L_x` for `x` in `gens`,
    /// unitized when `include_identity` holds. Rejects non-symmetric `q`
    /// unless `allow_nonsymmetric` is set.
    pub fn generate(q: &LeibnizAlgebra, gens: &Subspace, include_identity: bool, allow_nonsymmetric: bool) -> Result<Self> {
        if gens.ambient() != q.dim() {
            return Err(Error::DimensionMismatch {
                expected: q.dim(),
                found: gens.ambient(),
            });
        }
        if !q.is_symmetric() && !allow_nonsymmetric {
            return Err(Error::NotSymmetric);
        }
        let n = q.dim();
        let f = q.field();
        let mut generators = Vec::new();
        let mut ops = Vec::new();
        for x in gens.basis_vectors() {
            ops.push(q.right_operator(&x));
            ops.push(q.left_operator(&x));
            generators.push(Generator::Right(x.clone()));
            generators.push(Generator::Left(x));
        }
        let start = Subspace::from_vectors(f, n * n, ops.iter().map(to_vector));
        let mut space = stable_closure(n, start, &ops, &[]);
        if include_identity {
            generators.push(Generator::Identity);
            space = space.sum(&Subspace::from_vectors(f, n * n, vec![to_vector(&Matrix::identity(f, n))]));
        }
        let unital = space.contains(&to_vector(&Matrix::identity(f, n)));
        if include_identity {
            ops.push(Matrix::identity(f, n));
        }
        Ok(OperatorAlgebra {
            n,
            space,
            unital,
            generators,
            generator_ops: ops,
            outside_hypotheses: !q.is_symmetric(),
        })
    }

    /// `A(Q)`, generated by all multiplication operators.
    pub fn of(q: &LeibnizAlgebra, allow_nonsymmetric: bool) -> Result<Self> {
        OperatorAlgebra::generate(q, &q.full(), false, allow_nonsymmetric)
    }

    /// `A_Q(L)`, generated by multiplications by elements of `L ⊆ Q`.
    pub fn relative(q: &LeibnizAlgebra, l: &Subspace, allow_nonsymmetric: bool) -> Result<Self> {
        if !q.is_subalgebra(l) {
            return Err(Error::NotClosed("generating subspace is not a subalgebra".into()));
        }
        OperatorAlgebra::generate(q, l, false, allow_nonsymmetric)
    }

    /// `M(Q)`, the unitization of `A(Q)`.
    pub fn multiplication(q: &LeibnizAlgebra, allow_nonsymmetric: bool) -> Result<Self> {
        OperatorAlgebra::generate(q, &q.full(), true, allow_nonsymmetric)
    }

    /// A subspace of operators already known to be closed under composition.
    pub fn from_space(n: usize, space: Subspace) -> Result<Self> {
        if space.ambient() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: space.ambient(),
            });
        }
        let f = space.field();
        let alg = OperatorAlgebra {
            unital: space.contains(&to_vector(&Matrix::identity(f, n))),
            n,
            space,
            generators: Vec::new(),
            generator_ops: Vec::new(),
            outside_hypotheses: false,
        };
        if !alg.is_closed() {
            return Err(Error::NotClosed("operator space is not closed under composition".into()));
        }
        Ok(alg)
    }

    /// The span of the given matrices together with all their products.
    pub fn generated_by(field: Field, n: usize, mats: &[Matrix]) -> Self {
        let start = Subspace::from_vectors(field, n * n, mats.iter().map(to_vector));
        let space = stable_closure(n, start, mats, &[]);
        OperatorAlgebra {
            unital: space.contains(&to_vector(&Matrix::identity(field, n))),
            n,
            space,
            generators: Vec::new(),
            generator_ops: Vec::new(),
            outside_hypotheses: false,
        }
    }

    pub(crate) fn mark_outside(mut self, outside: bool) -> Self {
        self.outside_hypotheses |= outside;
        self
    }

    pub fn field(&self) -> Field {
        self.space.field()
    }

    /// Side length of the matrices.
    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn is_unital(&self) -> bool {
        self.unital
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    /// Generators paired with their matrices.
    pub fn generator_matrices(&self) -> impl Iterator<Item = (&Generator, &Matrix)> {
        self.generators.iter().zip(&self.generator_ops)
    }

    pub fn is_outside_hypotheses(&self) -> bool {
        self.outside_hypotheses
    }

    /// The flattened span.
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn basis(&self) -> Vec<Matrix> {
        let f = self.field();
        self.space
            .basis_vectors()
            .iter()
            .map(|v| to_matrix(f, self.n, v))
            .collect()
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.space.contains(&to_vector(m))
    }

    pub fn contains_space(&self, s: &Subspace) -> bool {
        s.is_subspace_of(&self.space)
    }

    /// Whether every product of two basis members lies in the span.
    pub fn is_closed(&self) -> bool {
        let basis = self.basis();
        basis
            .iter()
            .all(|a| basis.iter().all(|b| self.contains(&a.mul(b))))
    }

    /// Basis matrices flattened to decimal strings.
    pub fn flattened(&self) -> Vec<Vec<String>> {
        self.space
            .basis_vectors()
            .iter()
            .map(|v| crate::linalg::vector::to_strings(v))
            .collect()
    }
}
