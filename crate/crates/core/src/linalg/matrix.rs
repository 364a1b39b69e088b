use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::subspace::Subspace;
use crate::linalg::vector;
use crate::scalar::{Field, Scalar};

/// Dense matrix over a single exact field, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows; every row must have `cols` entries in `field`.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for s in row {
                if s.field() != field {
                    return Err(Error::FieldMismatch(field, s.field()));
                }
                data.push(s);
            }
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Matrix::from_rows(field, cols, rows).expect("well-formed literal")
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    /// Reshapes a row-major vector of length `rows * cols`.
    pub fn from_flat(field: Field, rows: usize, cols: usize, flat: Vec<Scalar>) -> Matrix {
        assert_eq!(flat.len(), rows * cols, "flat length mismatch");
        Matrix {
            field,
            rows,
            cols,
            data: flat,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            acc += self.get(i, i);
        }
        acc
    }

    /// Matrix product; the result acts as "apply `rhs` first".
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        assert_eq!(self.field, rhs.field, "field mismatch in matrix product");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch(self.field, rhs.field));
        }
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        Ok(self.mul(rhs))
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|r| vector::dot(self.row(r), v))
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// Stacks matrices with equal column counts vertically.
    pub fn vstack(field: Field, cols: usize, parts: &[Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            assert_eq!(p.cols, cols, "vstack column mismatch");
            rows += p.rows;
            data.extend(p.data.iter().cloned());
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Reduced row-echelon form with leading ones; zero rows are dropped.
    /// Returns the reduced matrix and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.row_vectors();
        let pivots = rref_in_place(&mut rows, self.cols);
        rows.truncate(pivots.len());
        let m = Matrix::from_rows(self.field, self.cols, rows).expect("shape preserved");
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.row_vectors();
        rref_in_place(&mut rows, self.cols).len()
    }

    /// `{v : self · v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, free);
            }
            basis.push(v);
        }
        Subspace::from_vectors(self.field, self.cols, basis)
    }
}

/// Gauss–Jordan elimination in place; returns pivot columns. Rows beyond
/// the rank are left zero at the end.
pub(crate) fn rref_in_place(rows: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for v in rows[r].iter_mut().skip(c) {
                *v = &*v * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (j, pv) in pivot_row.iter().enumerate().skip(c) {
                if !pv.is_zero() {
                    row[j] = &row[j] - &(&factor * pv);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl serde::Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.row_vectors().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_identity_is_zero() {
        let k = Matrix::identity(Field::Rational, 3).kernel();
        assert_eq!(k.dim(), 0);
        assert_eq!(k.ambient(), 3);
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let k = Matrix::zeros(Field::Rational, 2, 3).kernel();
        assert_eq!(k.dim(), 3);
    }

    #[test]
    fn kernel_over_gf5() {
        let f = Field::Prime(5);
        let m = Matrix::from_i64_rows(f, &[&[1, 1], &[2, 2]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 1);
        // x + y = 0 over GF(5): (1, 4)
        assert_eq!(k.basis().row(0), &[f.from_i64(1), f.from_i64(4)]);
    }

    #[test]
    fn rref_has_leading_ones() {
        let m = Matrix::from_i64_rows(Field::Rational, &[&[2, 4, 6], &[1, 1, 1]]);
        let (r, p) = m.rref();
        assert_eq!(p, vec![0, 1]);
        assert!(r.get(0, 0).is_one());
        assert!(r.get(1, 1).is_one());
        assert!(r.get(0, 1).is_zero());
    }

    #[test]
    fn product_composes_maps() {
        let f = Field::Rational;
        let a = Matrix::from_i64_rows(f, &[&[0, 1], &[0, 0]]);
        let b = Matrix::from_i64_rows(f, &[&[0, 0], &[1, 0]]);
        let ab = a.mul(&b);
        assert_eq!(ab, Matrix::from_i64_rows(f, &[&[1, 0], &[0, 0]]));
        let v = vec![f.from_i64(1), f.from_i64(0)];
        assert_eq!(ab.apply(&v), a.apply(&b.apply(&v)));
    }

    #[test]
    fn try_mul_reports_shape_errors() {
        let f = Field::Rational;
        let a = Matrix::zeros(f, 2, 3);
        assert!(a.try_mul(&a).is_err());
        let b = Matrix::zeros(Field::Prime(3), 3, 2);
        assert!(matches!(a.try_mul(&b), Err(Error::FieldMismatch(..))));
    }
}
