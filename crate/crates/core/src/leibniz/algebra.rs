use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::leibniz::ideal::{Ideal, IdealKind};
use crate::linalg::{joint_kernel, vector, Matrix, Subspace};
use crate::scalar::{Field, Scalar};

/// Which multiplication a caller means: `Left` is `L_y(u) = [y, u]`,
/// `Right` is `R_x(u) = [u, x]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
    Both,
}

/// A basis triple `(i, j, k)` on which an identity fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub triple: [usize; 3],
    /// `lhs − rhs` of the failing identity, in basis coordinates.
    pub defect: Vec<Scalar>,
}

/// Result of evaluating both Leibniz identities on every basis triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub right: bool,
    pub left: bool,
    pub symmetric: bool,
    pub right_violation: Option<Violation>,
    pub left_violation: Option<Violation>,
}

/// A finite-dimensional algebra given by structure constants
/// `[b_i, b_j] = Σ_k c[i][j][k] b_k`.
#[derive(Clone, Debug)]
pub struct LeibnizAlgebra {
    name: String,
    field: Field,
    dim: usize,
    /// `products[i * dim + j]` is the coordinate vector of `[b_i, b_j]`.
    products: Vec<Vec<Scalar>>,
    report: IdentityReport,
}

impl PartialEq for LeibnizAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.dim == other.dim && self.products == other.products
    }
}

impl LeibnizAlgebra {
    /// Builds an algebra from sparse entries `(i, j, k, c)`; repeated
    /// entries for the same `(i, j, k)` are summed.
    pub fn from_entries<I>(name: impl Into<String>, field: Field, dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let mut products = vec![vector::zero(field, dim); dim * dim];
        for (i, j, k, c) in entries {
            for idx in [i, j, k] {
                if idx >= dim {
                    return Err(Error::Parse(format!(
                        "structure constant index {idx} out of range for dimension {dim}"
                    )));
                }
            }
            if c.field() != field {
                return Err(Error::FieldMismatch(field, c.field()));
            }
            products[i * dim + j][k] += &c;
        }
        Ok(Self::from_products(name, field, dim, products))
    }

    /// Builds an algebra from the full table of basis products.
    pub fn from_products(name: impl Into<String>, field: Field, dim: usize, products: Vec<Vec<Scalar>>) -> Self {
        assert_eq!(products.len(), dim * dim, "product table has wrong size");
        for p in &products {
            assert_eq!(p.len(), dim, "product vector has wrong length");
        }
        let mut alg = LeibnizAlgebra {
            name: name.into(),
            field,
            dim,
            products,
            report: IdentityReport {
                right: false,
                left: false,
                symmetric: false,
                right_violation: None,
                left_violation: None,
            },
        };
        alg.report = alg.evaluate_identities();
        alg
    }

    /// Convenience constructor from small integer constants.
    pub fn from_i64_entries(name: &str, field: Field, dim: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        Self::from_entries(name, field, dim, entries.iter().map(|&(i, j, k, c)| (i, j, k, field.from_i64(c))))
            .expect("well-formed literal table")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.products[i * self.dim + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.products[i * self.dim + j][k]
    }

    /// Nonzero structure constants in `(i, j, k)` order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in self.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn identities(&self) -> &IdentityReport {
        &self.report
    }

    pub fn is_right_leibniz(&self) -> bool {
        self.report.right
    }

    pub fn is_left_leibniz(&self) -> bool {
        self.report.left
    }

    pub fn is_symmetric(&self) -> bool {
        self.report.symmetric
    }

    pub fn is_abelian(&self) -> bool {
        self.products.iter().all(|p| vector::is_zero(p))
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vector::zero(self.field, self.dim)
    }

    pub fn unit(&self, i: usize) -> Vec<Scalar> {
        vector::unit(self.field, self.dim, i)
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace::zero(self.field, self.dim)
    }

    pub fn span(&self, vectors: Vec<Vec<Scalar>>) -> Subspace {
        Subspace::from_vectors(self.field, self.dim, vectors)
    }

    /// Bilinear expansion of `[x, y]`.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim, "bracket argument has wrong length");
        assert_eq!(y.len(), self.dim, "bracket argument has wrong length");
        let mut out = self.zero_vector();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                vector::axpy(&mut out, &(xi * yj), self.basis_product(i, j));
            }
        }
        out
    }

    pub fn try_bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: v.len(),
                });
            }
        }
        Ok(self.bracket(x, y))
    }

    fn evaluate_identities(&self) -> IdentityReport {
        let n = self.dim;
        let mut right_violation = None;
        let mut left_violation = None;
        'outer: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if right_violation.is_some() && left_violation.is_some() {
                        break 'outer;
                    }
                    let (x, y, z) = (self.unit(i), self.unit(j), self.unit(k));
                    let x_yz = self.bracket(&x, self.basis_product(j, k));
                    let xy_z = self.bracket(self.basis_product(i, j), &z);
                    if right_violation.is_none() {
                        // [x,[y,z]] = [[x,y],z] − [[x,z],y]
                        let xz_y = self.bracket(self.basis_product(i, k), &y);
                        let defect = vector::sub(&x_yz, &vector::sub(&xy_z, &xz_y));
                        if !vector::is_zero(&defect) {
                            right_violation = Some(Violation {
                                triple: [i, j, k],
                                defect,
                            });
                        }
                    }
                    if left_violation.is_none() {
                        // [x,[y,z]] = [[x,y],z] + [y,[x,z]]
                        let y_xz = self.bracket(&y, self.basis_product(i, k));
                        let defect = vector::sub(&x_yz, &vector::add(&xy_z, &y_xz));
                        if !vector::is_zero(&defect) {
                            left_violation = Some(Violation {
                                triple: [i, j, k],
                                defect,
                            });
                        }
                    }
                }
            }
        }
        let right = right_violation.is_none();
        let left = left_violation.is_none();
        IdentityReport {
            right,
            left,
            symmetric: right && left,
            right_violation,
            left_violation,
        }
    }

    /// Re-evaluates both identities on all basis triples.
    pub fn validate_identities(&self) -> IdentityReport {
        self.evaluate_identities()
    }

    /// Matrix of `R_x : u ↦ [u, x]`; column `j` is `[b_j, x]`.
    pub fn right_operator(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.bracket(&self.unit(j), x)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `L_y : u ↦ [y, u]`; column `j` is `[y, b_j]`.
    pub fn left_operator(&self, y: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.bracket(y, &self.unit(j))).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// `R_x` or `L_x` depending on `side`; `Both` is rejected.
    pub fn multiplication_operator(&self, side: Side, x: &[Scalar]) -> Matrix {
        match side {
            Side::Right => self.right_operator(x),
            Side::Left => self.left_operator(x),
            Side::Both => panic!("a multiplication operator has a single side"),
        }
    }

    /// `lan(H) = {x : [x,H]=0}`, `ran(H) = {x : [H,x]=0}`, or their intersection.
    pub fn annihilator(&self, h: &Subspace, side: Side) -> Subspace {
        assert_eq!(h.ambient(), self.dim, "subspace lives in a different ambient space");
        let mut maps = Vec::new();
        for u in h.basis_vectors() {
            if matches!(side, Side::Left | Side::Both) {
                maps.push(self.right_operator(&u));
            }
            if matches!(side, Side::Right | Side::Both) {
                maps.push(self.left_operator(&u));
            }
        }
        joint_kernel(self.field, self.dim, &maps)
    }

    pub fn lan(&self, h: &Subspace) -> Subspace {
        self.annihilator(h, Side::Left)
    }

    pub fn ran(&self, h: &Subspace) -> Subspace {
        self.annihilator(h, Side::Right)
    }

    pub fn ann(&self, h: &Subspace) -> Subspace {
        self.annihilator(h, Side::Both)
    }

    /// `Ann_L(L)`.
    pub fn center_annihilator(&self) -> Subspace {
        self.ann(&self.full())
    }

    /// `span{[a, b] : a ∈ A, b ∈ B}`.
    pub fn product_space(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for u in a.basis_vectors() {
            for v in b.basis_vectors() {
                vecs.push(self.bracket(&u, &v));
            }
        }
        self.span(vecs)
    }

    /// `span{[x, x]}`, spanned by `[b_i,b_i]` and `[b_i,b_j] + [b_j,b_i]`.
    pub fn leibniz_kernel(&self) -> Subspace {
        let mut vecs = Vec::new();
        for i in 0..self.dim {
            for j in i..self.dim {
                if i == j {
                    vecs.push(self.basis_product(i, i).to_vec());
                } else {
                    vecs.push(vector::add(self.basis_product(i, j), self.basis_product(j, i)));
                }
            }
        }
        self.span(vecs)
    }

    /// Images of `u` under every basis multiplication required by `kind`.
    pub(crate) fn closure_images(&self, u: &[Scalar], kind: IdealKind) -> Vec<Vec<Scalar>> {
        let mut out = Vec::new();
        for k in 0..self.dim {
            let b = self.unit(k);
            if kind.needs_right() {
                out.push(self.bracket(u, &b));
            }
            if kind.needs_left() {
                out.push(self.bracket(&b, u));
            }
        }
        out
    }

    /// Least subspace containing `space` and stable under the multiplications of `kind`.
    pub fn close_subspace(&self, space: &Subspace, kind: IdealKind) -> Subspace {
        let mut current = space.clone();
        let mut frontier = current.basis_vectors();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for u in &frontier {
                for w in self.closure_images(u, kind) {
                    if !current.contains(&w) {
                        current = current.sum(&self.span(vec![w.clone()]));
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        current
    }

    /// Ideal of the given kind generated by a set of vectors.
    pub fn ideal_generated_by(&self, generators: &[Vec<Scalar>], kind: IdealKind) -> Ideal {
        let start = self.span(generators.to_vec());
        let closed = self.close_subspace(&start, kind);
        Ideal::new(self, closed, kind).expect("closure loop yields a closed subspace")
    }

    /// Two-sided ideal generated by a subspace.
    pub fn ideal_closure(&self, space: &Subspace) -> Ideal {
        Ideal::new(self, self.close_subspace(space, IdealKind::TwoSided), IdealKind::TwoSided)
            .expect("closure loop yields a closed subspace")
    }

    /// `I^1 = I`, `I^{k+1}` = ideal generated by `[I^k, I]`.
    pub fn ideal_power(&self, ideal: &Ideal, s: usize) -> Ideal {
        assert!(s >= 1, "ideal powers start at 1");
        let mut current = ideal.clone();
        for _ in 1..s {
            let prod = self.product_space(current.space(), ideal.space());
            current = self.ideal_closure(&prod);
        }
        current
    }

    /// `[L, L]`, `[[L,L],[L,L]]`, … until stable, each as an ideal.
    pub fn derived_series(&self, start: &Subspace) -> Vec<Subspace> {
        let mut out = vec![start.clone()];
        loop {
            let last = out.last().expect("nonempty");
            let next = self.product_space(last, last);
            if &next == last {
                break;
            }
            let stop = next.is_zero();
            out.push(next);
            if stop {
                break;
            }
        }
        out
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        self.product_space(s, s).is_subspace_of(s)
    }

    /// Least subalgebra containing `s`.
    pub fn generated_subalgebra(&self, s: &Subspace) -> Subspace {
        let mut current = s.clone();
        loop {
            let next = current.sum(&self.product_space(&current, &current));
            if next.dim() == current.dim() {
                return current;
            }
            current = next;
        }
    }

    /// The bracket restricted to a closed subspace, in the canonical basis of `s`.
    pub fn subalgebra(&self, s: &Subspace, name: impl Into<String>) -> Result<LeibnizAlgebra> {
        if !self.is_subalgebra(s) {
            return Err(Error::NotClosed("subspace is not a subalgebra".into()));
        }
        let basis = s.basis_vectors();
        let m = basis.len();
        let mut products = Vec::with_capacity(m * m);
        for u in &basis {
            for v in &basis {
                products.push(s.coords(&self.bracket(u, v)).expect("closed"));
            }
        }
        Ok(LeibnizAlgebra::from_products(name, self.field, m, products))
    }

    /// Block-diagonal direct sum `A ⊕ B`.
    pub fn direct_sum(&self, other: &LeibnizAlgebra) -> Result<LeibnizAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        let (a, b) = (self.dim, other.dim);
        let mut entries = Vec::new();
        for (i, j, k, c) in self.entries() {
            entries.push((i, j, k, c));
        }
        for (i, j, k, c) in other.entries() {
            entries.push((i + a, j + a, k + a, c));
        }
        LeibnizAlgebra::from_entries(format!("{}+{}", self.name, other.name), self.field, a + b, entries)
    }

    /// Killing form `tr(R_x R_y)` on basis pairs.
    pub fn killing_form(&self) -> Matrix {
        let ops: Vec<Matrix> = (0..self.dim).map(|i| self.right_operator(&self.unit(i))).collect();
        let mut k = Matrix::zeros(self.field, self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                k.set(i, j, ops[i].mul(&ops[j]).trace());
            }
        }
        k
    }

    /// Applies a change of basis: the new basis vectors are the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<LeibnizAlgebra> {
        let n = self.dim;
        if p.rows() != n || p.cols() != n || p.rank() != n {
            return Err(Error::Degenerate("change of basis must be invertible".into()));
        }
        let cols = p.columns();
        let mut products = Vec::with_capacity(n * n);
        let solver = ColumnSolver::new(p);
        for u in &cols {
            for v in &cols {
                products.push(solver.solve(&self.bracket(u, v)));
            }
        }
        Ok(LeibnizAlgebra::from_products(self.name.clone(), self.field, n, products))
    }
}

/// Solves `P c = v` for an invertible square `P`.
pub(crate) struct ColumnSolver {
    cols: Vec<Vec<Scalar>>,
    field: Field,
    n: usize,
}

impl ColumnSolver {
    pub(crate) fn new(p: &Matrix) -> Self {
        ColumnSolver {
            cols: p.columns(),
            field: p.field(),
            n: p.rows(),
        }
    }

    pub(crate) fn solve(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut aug: Vec<Vec<Scalar>> = (0..self.n)
            .map(|r| {
                let mut row: Vec<Scalar> = self.cols.iter().map(|c| c[r].clone()).collect();
                row.push(v[r].clone());
                row
            })
            .collect();
        let pivots = crate::linalg::matrix::rref_in_place(&mut aug, self.cols.len() + 1);
        assert!(pivots.iter().all(|&p| p < self.cols.len()), "vector outside the column span");
        let mut out = vector::zero(self.field, self.cols.len());
        for (r, &p) in pivots.iter().enumerate() {
            out[p] = aug[r][self.cols.len()].clone();
        }
        out
    }
}

impl fmt::Display for LeibnizAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} over {} (dim {})", self.name, self.field, self.dim)?;
        for (i, j, k, c) in self.entries() {
            writeln!(f, "  [b{i}, b{j}] += {c} b{k}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leibniz::catalog;

    #[test]
    fn sl2_bracket_reads_table() {
        let a = catalog::sl2(Field::Rational);
        let (e, h) = (a.unit(0), a.unit(2));
        assert_eq!(a.bracket(&h, &e), vector::from_i64(Field::Rational, &[2, 0, 0]));
        assert!(a.is_symmetric());
    }

    #[test]
    fn abelian_brackets_vanish() {
        let a = catalog::abelian(Field::Rational, 3);
        assert!(vector::is_zero(&a.bracket(&a.unit(0), &a.unit(1))));
        assert!(a.right_operator(&a.unit(2)).is_zero());
    }

    #[test]
    fn l2_square_of_generator() {
        let a = catalog::l2(Field::Rational);
        assert_eq!(a.bracket(&a.unit(0), &a.unit(0)), a.unit(1));
        assert!(a.is_symmetric());
        let l = a.left_operator(&a.unit(0));
        assert_eq!(l.column(0), a.unit(1));
        assert!(vector::is_zero(&l.column(1)));
    }

    #[test]
    fn right_operator_of_h_is_diagonal() {
        let q = Field::Rational;
        let a = catalog::sl2(q);
        let r = a.right_operator(&a.unit(2));
        let expected = Matrix::from_i64_rows(q, &[&[-2, 0, 0], &[0, 2, 0], &[0, 0, 0]]);
        assert_eq!(r, expected);
    }

    #[test]
    fn perturbed_sl2_violates_right_identity() {
        let a = catalog::perturbed_sl2(Field::Rational);
        let rep = a.validate_identities();
        assert!(!rep.right);
        let v = rep.right_violation.expect("witness triple");
        let [i, j, k] = v.triple;
        let (x, y, z) = (a.unit(i), a.unit(j), a.unit(k));
        let lhs = a.bracket(&x, &a.bracket(&y, &z));
        let rhs = vector::sub(&a.bracket(&a.bracket(&x, &y), &z), &a.bracket(&a.bracket(&x, &z), &y));
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn annihilators_of_small_algebras() {
        let a = catalog::abelian(Field::Rational, 2);
        assert!(a.ann(&a.full()).is_full());
        let l2 = catalog::l2(Field::Rational);
        assert_eq!(l2.ann(&l2.full()), l2.span(vec![l2.unit(1)]));
        let s = catalog::sl2(Field::Rational);
        assert!(s.ran(&s.full()).is_zero());
    }

    #[test]
    fn ideal_generation() {
        let s = catalog::sl2(Field::Rational);
        assert!(s.ideal_generated_by(&[s.unit(0)], IdealKind::TwoSided).space().is_full());
        let l2 = catalog::l2(Field::Rational);
        let i = l2.ideal_generated_by(&[l2.unit(1)], IdealKind::TwoSided);
        assert_eq!(i.space(), &l2.span(vec![l2.unit(1)]));
        assert!(s.ideal_generated_by(&[], IdealKind::TwoSided).is_zero());
    }

    #[test]
    fn ideal_powers() {
        let s = catalog::sl2(Field::Rational);
        let whole = Ideal::whole(&s);
        assert!(s.ideal_power(&whole, 2).space().is_full());
        let l2 = catalog::l2(Field::Rational);
        let p = l2.ideal_power(&Ideal::whole(&l2), 2);
        assert_eq!(p.space(), &l2.span(vec![l2.unit(1)]));
        let ab = catalog::abelian(Field::Rational, 3);
        assert!(ab.ideal_power(&Ideal::whole(&ab), 2).is_zero());
    }

    #[test]
    fn direct_sums() {
        let q = Field::Rational;
        let s = catalog::sl2(q);
        let ss = s.direct_sum(&s).unwrap();
        assert_eq!(ss.dim(), 6);
        assert!(ss.is_symmetric());
        let sa = s.direct_sum(&catalog::abelian(q, 1)).unwrap();
        assert!(sa.center_annihilator().contains(&sa.unit(3)));
        let ls = catalog::l2(q).direct_sum(&s).unwrap();
        assert_eq!(ls.dim(), 5);
        assert!(ls.is_right_leibniz());
        assert!(s.direct_sum(&catalog::sl2(Field::Prime(5))).is_err());
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let s = catalog::sl2(Field::Rational);
        assert!(s.try_bracket(&s.unit(0), &vector::zero(Field::Rational, 2)).is_err());
    }

    #[test]
    fn change_of_basis_preserves_identities() {
        let q = Field::Rational;
        let s = catalog::sl2(q);
        let p = Matrix::from_i64_rows(q, &[&[1, 1, 0], &[0, 1, 0], &[1, 0, 1]]);
        let t = s.change_basis(&p).unwrap();
        assert!(t.is_symmetric());
        assert!(t.ran(&t.full()).is_zero());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;
        use rand::SeedableRng;

        fn algebras() -> Vec<LeibnizAlgebra> {
            let q = Field::Rational;
            vec![
                catalog::sl2(q),
                catalog::l2(q),
                catalog::heisenberg(q),
                catalog::l2_sl2(q),
                catalog::sl2(Field::Prime(5)),
            ]
        }

        proptest! {
            #[test]
            fn bracket_is_bilinear(idx in 0usize..5, seed in any::<u64>()) {
                let a = &algebras()[idx];
                let f = a.field();
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                let x = vector::random(f, a.dim(), &mut rng);
                let y = vector::random(f, a.dim(), &mut rng);
                let z = vector::random(f, a.dim(), &mut rng);
                let (s, t) = (f.random(&mut rng), f.random(&mut rng));
                let lin = vector::add(&vector::scale(&x, &s), &vector::scale(&y, &t));
                let lhs = a.bracket(&lin, &z);
                let rhs = vector::add(&vector::scale(&a.bracket(&x, &z), &s), &vector::scale(&a.bracket(&y, &z), &t));
                prop_assert_eq!(lhs, rhs);
                let lhs = a.bracket(&z, &lin);
                let rhs = vector::add(&vector::scale(&a.bracket(&z, &x), &s), &vector::scale(&a.bracket(&z, &y), &t));
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn operators_match_bracket(idx in 0usize..5, seed in any::<u64>()) {
                let a = &algebras()[idx];
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                let x = vector::random(a.field(), a.dim(), &mut rng);
                let u = vector::random(a.field(), a.dim(), &mut rng);
                prop_assert_eq!(a.right_operator(&x).apply(&u), a.bracket(&u, &x));
                prop_assert_eq!(a.left_operator(&x).apply(&u), a.bracket(&x, &u));
            }
        }
    }
}
