use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::matrix::{rref_in_place, Matrix};
use crate::linalg::vector;
use crate::scalar::{Field, Scalar};

/// A subspace of `field^ambient` in canonical form.
///
/// The basis is the reduced row-echelon form of any spanning set, so two
/// subspaces are equal exactly when their bases are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn from_vectors<I>(field: Field, ambient: usize, vectors: I) -> Subspace
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut rows: Vec<Vec<Scalar>> = vectors.into_iter().collect();
        for r in &rows {
            assert_eq!(r.len(), ambient, "vector length differs from ambient dimension");
        }
        let pivots = rref_in_place(&mut rows, ambient);
        rows.truncate(pivots.len());
        Subspace {
            field,
            ambient,
            basis: Matrix::from_rows(field, ambient, rows).expect("checked lengths"),
            pivots,
        }
    }

    /// Checked constructor for caller-supplied vectors.
    pub fn try_from_vectors(field: Field, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Result<Subspace> {
        for v in &vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
            if let Some(s) = v.iter().find(|s| s.field() != field) {
                return Err(Error::FieldMismatch(field, s.field()));
            }
        }
        Ok(Subspace::from_vectors(field, ambient, vectors))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Basis in reduced row-echelon form, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vectors()
    }

    pub fn basis_vector(&self, i: usize) -> &[Scalar] {
        self.basis.row(i)
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v ∉ self`.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient, "vector length differs from ambient dimension");
        let coeffs: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let row = self.basis.row(i);
                for (r, b) in residual.iter_mut().zip(row) {
                    if !b.is_zero() {
                        *r = &*r - &(c * b);
                    }
                }
            }
        }
        vector::is_zero(&residual).then_some(coeffs)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_some()
    }

    /// Vector with the given coordinates in the canonical basis.
    pub fn combination(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coeffs.len(), self.dim());
        let mut acc = vector::zero(self.field, self.ambient);
        for (i, c) in coeffs.iter().enumerate() {
            vector::axpy(&mut acc, c, self.basis.row(i));
        }
        acc
    }

    fn check_compatible(&self, other: &Subspace) {
        assert_eq!(self.field, other.field, "field mismatch between subspaces");
        assert_eq!(self.ambient, other.ambient, "ambient mismatch between subspaces");
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        self.check_compatible(other);
        let vecs = self.basis_vectors().into_iter().chain(other.basis_vectors());
        Subspace::from_vectors(self.field, self.ambient, vecs)
    }

    /// `self ∩ other`, computed as the annihilator of the sum of annihilators.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        self.check_compatible(other);
        if self.is_full() {
            return other.clone();
        }
        if other.is_full() {
            return self.clone();
        }
        self.perp().sum(&other.perp()).perp()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.check_compatible(other);
        self.dim() <= other.dim() && (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    /// `{w : w·v = 0 for all v ∈ self}` under the standard pairing.
    pub fn perp(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.field, self.ambient);
        }
        self.basis.kernel()
    }

    /// Rows `P` with `v ∈ self ⇔ P v = 0`.
    pub fn membership_matrix(&self) -> Matrix {
        let p = self.perp();
        p.basis.clone()
    }

    /// Standard basis vectors at the non-pivot columns; they span a complement.
    pub fn complement_basis(&self) -> Vec<Vec<Scalar>> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient)
            .filter(|&c| !is_pivot[c])
            .map(|c| vector::unit(self.field, self.ambient, c))
            .collect()
    }

    /// Image of the subspace under a linear map (matrix acting on columns).
    pub fn image(&self, map: &Matrix) -> Subspace {
        assert_eq!(map.cols(), self.ambient);
        let vecs = (0..self.dim()).map(|i| map.apply(self.basis.row(i)));
        Subspace::from_vectors(self.field, map.rows(), vecs)
    }

    /// Matrix whose columns are the basis vectors (ambient × dim).
    pub fn basis_columns(&self) -> Matrix {
        self.basis.transpose()
    }
}

/// `{v : m·v = 0}`.
pub fn kernel(m: &Matrix) -> Subspace {
    m.kernel()
}

/// `a ∩ b`, rejecting mismatched ambients or fields.
pub fn intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    if a.field != b.field {
        return Err(Error::FieldMismatch(a.field, b.field));
    }
    if a.ambient != b.ambient {
        return Err(Error::DimensionMismatch {
            expected: a.ambient,
            found: b.ambient,
        });
    }
    Ok(a.intersect(b))
}

/// `{c : map·c ∈ target}`.
pub fn preimage(map: &Matrix, target: &Subspace) -> Subspace {
    assert_eq!(map.rows(), target.ambient());
    if target.is_full() {
        return Subspace::full(map.field(), map.cols());
    }
    let p = target.membership_matrix();
    p.mul(map).kernel()
}

/// Kernel of several maps out of the same space at once.
pub fn joint_kernel(field: Field, cols: usize, maps: &[Matrix]) -> Subspace {
    if maps.is_empty() {
        return Subspace::full(field, cols);
    }
    Matrix::vstack(field, cols, maps).kernel()
}

impl Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Subspace", 3)?;
        st.serialize_field("ambient", &self.ambient)?;
        st.serialize_field("dim", &self.dim())?;
        st.serialize_field("basis", &self.basis)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vector::from_i64;

    fn span(f: Field, n: usize, vs: &[&[i64]]) -> Subspace {
        Subspace::from_vectors(f, n, vs.iter().map(|v| from_i64(f, v)))
    }

    #[test]
    fn intersection_is_idempotent() {
        let q = Field::Rational;
        let v = span(q, 3, &[&[1, 2, 3], &[0, 1, 1]]);
        assert_eq!(v.intersect(&v), v);
    }

    #[test]
    fn complementary_axes_meet_in_zero() {
        let q = Field::Rational;
        let a = span(q, 2, &[&[1, 0]]);
        let b = span(q, 2, &[&[0, 1]]);
        assert!(a.intersect(&b).is_zero());
    }

    #[test]
    fn joint_system_intersection() {
        let q = Field::Rational;
        let a = span(q, 3, &[&[1, 1, 0], &[0, 0, 1]]);
        let b = span(q, 3, &[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(a.intersect(&b), span(q, 3, &[&[0, 0, 1]]));
    }

    #[test]
    fn containment() {
        let q = Field::Rational;
        assert!(Subspace::full(q, 2).contains(&from_i64(q, &[7, -3])));
        assert!(!Subspace::zero(q, 2).contains(&from_i64(q, &[1, 0])));
        let l = span(q, 2, &[&[1, 2]]);
        assert!(l.contains(&from_i64(q, &[2, 4])));
        assert!(!l.contains(&from_i64(q, &[2, 5])));
    }

    #[test]
    fn checked_intersect_rejects_mismatch() {
        let q = Field::Rational;
        assert!(intersect(&Subspace::full(q, 2), &Subspace::full(q, 3)).is_err());
        assert!(intersect(&Subspace::full(q, 2), &Subspace::full(Field::Prime(3), 2)).is_err());
    }

    #[test]
    fn preimage_solves_membership() {
        let q = Field::Rational;
        // map (a, b) -> (a, b, a + b); target = {z = 0}
        let m = Matrix::from_i64_rows(q, &[&[1, 0], &[0, 1], &[1, 1]]);
        let t = span(q, 3, &[&[1, 0, 0], &[0, 1, 0]]);
        let pre = preimage(&m, &t);
        assert_eq!(pre, span(q, 2, &[&[1, -1]]));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;
        use rand::seq::SliceRandom;
        use rand::SeedableRng;

        fn field_strategy() -> impl Strategy<Value = Field> {
            prop_oneof![Just(Field::Rational), Just(Field::Prime(2)), Just(Field::Prime(7))]
        }

        fn matrix(field: Field, rows: usize, cols: usize, seed: u64) -> Matrix {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let rows = (0..rows)
                .map(|_| vector::random(field, cols, &mut rng))
                .collect();
            Matrix::from_rows(field, cols, rows).unwrap()
        }

        proptest! {
            #[test]
            fn rank_nullity(f in field_strategy(), r in 0usize..5, c in 1usize..6, seed in any::<u64>()) {
                let m = matrix(f, r, c, seed);
                prop_assert_eq!(m.rank() + m.kernel().dim(), c);
                for v in m.kernel().basis_vectors() {
                    prop_assert!(vector::is_zero(&m.apply(&v)));
                }
            }

            #[test]
            fn canonical_form_ignores_row_order(f in field_strategy(), r in 1usize..5, c in 1usize..6, seed in any::<u64>()) {
                let m = matrix(f, r, c, seed);
                let mut rows = m.row_vectors();
                let a = Subspace::from_vectors(f, c, rows.clone());
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
                rows.shuffle(&mut rng);
                let b = Subspace::from_vectors(f, c, rows.clone());
                prop_assert_eq!(&a, &b);
                let other = matrix(f, 2, c, seed.wrapping_add(1));
                let o = Subspace::from_vectors(f, c, other.row_vectors());
                let o_shuffled = Subspace::from_vectors(f, c, other.row_vectors().into_iter().rev());
                prop_assert_eq!(a.intersect(&o), b.intersect(&o_shuffled));
                prop_assert_eq!(a.sum(&o), b.sum(&o_shuffled));
                let kr = Matrix::from_rows(f, c, rows).unwrap().kernel();
                prop_assert_eq!(kr, m.kernel());
            }

            #[test]
            fn intersection_dimension_formula(f in field_strategy(), c in 1usize..6, seed in any::<u64>()) {
                let a = Subspace::from_vectors(f, c, matrix(f, 2, c, seed).row_vectors());
                let b = Subspace::from_vectors(f, c, matrix(f, 3, c, seed ^ 77).row_vectors());
                let i = a.intersect(&b);
                prop_assert_eq!(i.dim() + a.sum(&b).dim(), a.dim() + b.dim());
                prop_assert!(i.is_subspace_of(&a) && i.is_subspace_of(&b));
            }
        }
    }
}
