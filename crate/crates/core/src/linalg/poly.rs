//! Minimal polynomials, roots in the ground field, and commutants of
//! matrix families.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::linalg::{Matrix, Subspace};
use crate::scalar::{integer_multiple, Field, Scalar};

/// Monic minimal polynomial of a square matrix, coefficients from the
/// constant term upwards.
pub fn minimal_polynomial(m: &Matrix) -> Vec<Scalar> {
    assert!(m.is_square(), "minimal polynomial needs a square matrix");
    let f = m.field();
    let n = m.rows();
    if n == 0 {
        return vec![f.one()];
    }
    let mut powers = vec![Matrix::identity(f, n)];
    loop {
        let next = powers.last().expect("nonempty").mul(m);
        let cols: Vec<Vec<Scalar>> = powers.iter().map(Matrix::flatten).collect();
        if let Some(c) = solve_combination(f, n * n, &cols, &next.flatten()) {
            let mut poly: Vec<Scalar> = c.iter().map(|x| -x).collect();
            poly.push(f.one());
            return poly;
        }
        powers.push(next);
    }
}

/// Coefficients `c` with `Σ c_i cols_i = target`, if any.
fn solve_combination(f: Field, len: usize, cols: &[Vec<Scalar>], target: &[Scalar]) -> Option<Vec<Scalar>> {
    let mut with_target = cols.to_vec();
    with_target.push(target.to_vec());
    let m = Matrix::from_columns(f, len, &with_target);
    let ker = m.kernel();
    ker.basis_vectors().into_iter().find_map(|v| {
        let last = v.last().expect("nonempty").clone();
        if last.is_zero() {
            return None;
        }
        let scale = -(last.inv().expect("nonzero"));
        Some(v[..cols.len()].iter().map(|x| x * &scale).collect())
    })
}

pub fn evaluate(poly: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = x.field().zero();
    for c in poly.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// Roots of `poly` in its field. Over ℚ the rational root test is used;
/// constant or leading coefficients too large to factor are skipped, so
/// the result may be incomplete in that case.
pub fn roots(field: Field, poly: &[Scalar]) -> Vec<Scalar> {
    match field {
        Field::Prime(_) => field
            .elements()
            .expect("finite field")
            .into_iter()
            .filter(|x| evaluate(poly, x).is_zero())
            .collect(),
        Field::Rational => rational_roots(poly),
    }
}

const DIVISOR_LIMIT: u64 = 1 << 40;

fn divisors(v: &BigInt) -> Option<Vec<u64>> {
    let v = v.abs().to_u64()?;
    if v > DIVISOR_LIMIT {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v % d == 0 {
            out.push(d);
            if d * d != v {
                out.push(v / d);
            }
        }
        d += 1;
    }
    Some(out)
}

fn rational_roots(poly: &[Scalar]) -> Vec<Scalar> {
    let f = Field::Rational;
    let rats: Vec<BigRational> = poly.iter().map(|s| s.as_rational().expect("rational").clone()).collect();
    let mut ints = integer_multiple(&rats);
    while ints.len() > 1 && ints.last().is_some_and(Zero::is_zero) {
        ints.pop();
    }
    let mut out = Vec::new();
    let shift = ints.iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        out.push(f.zero());
        ints.drain(..shift);
    }
    if ints.len() <= 1 {
        return out;
    }
    let (Some(ps), Some(qs)) = (divisors(&ints[0]), divisors(ints.last().expect("nonempty"))) else {
        return out;
    };
    let mut cands: Vec<BigRational> = Vec::new();
    for &p in &ps {
        for &q in &qs {
            let r = BigRational::new(BigInt::from(p), BigInt::from(q));
            cands.push(r.clone());
            cands.push(-r);
        }
    }
    cands.sort();
    cands.dedup();
    for r in cands {
        let mut acc = BigRational::zero();
        for c in ints.iter().rev() {
            acc = acc * &r + BigRational::from_integer(c.clone());
        }
        if acc.is_zero() {
            out.push(f.from_rational(&r).expect("rational"));
        }
    }
    out
}

/// Basis of `{c : c·T = T·c for every T in mats}` for `m×m` matrices.
pub fn commutant(field: Field, m: usize, mats: &[Matrix]) -> Vec<Matrix> {
    let unknowns = m * m;
    let mut rows = Vec::new();
    for t in mats {
        for i in 0..m {
            for j in 0..m {
                let mut row = vec![field.zero(); unknowns];
                for k in 0..m {
                    // (cT)[i][j] = Σ_k c[i][k] T[k][j]
                    row[i * m + k] += t.get(k, j);
                    // (Tc)[i][j] = Σ_k T[i][k] c[k][j]
                    row[k * m + j] -= t.get(i, k);
                }
                rows.push(row);
            }
        }
    }
    let sys = Matrix::from_rows(field, unknowns, rows).expect("shape");
    let ker = if mats.is_empty() {
        Subspace::full(field, unknowns)
    } else {
        sys.kernel()
    };
    ker.basis_vectors()
        .into_iter()
        .map(|v| Matrix::from_flat(field, m, m, v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_polynomial_of_diagonal() {
        let q = Field::Rational;
        let m = Matrix::from_i64_rows(q, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, -3]]);
        let p = minimal_polynomial(&m);
        // (t - 2)(t + 3) = t^2 + t - 6
        let expect: Vec<Scalar> = [-6, 1, 1].iter().map(|&v| q.from_i64(v)).collect();
        assert_eq!(p, expect);
        let mut r = roots(q, &p);
        r.sort_by_key(|s| s.to_string());
        assert_eq!(r, vec![q.from_i64(-3), q.from_i64(2)]);
    }

    #[test]
    fn rational_roots_with_denominators() {
        let q = Field::Rational;
        // 2t^2 - t = t (2t - 1)
        let p: Vec<Scalar> = [0, -1, 2].iter().map(|&v| q.from_i64(v)).collect();
        let r = roots(q, &p);
        assert!(r.contains(&q.zero()));
        assert!(r.contains(&q.parse("1/2").unwrap()));
        // t^2 + 1 has no rational root
        let p: Vec<Scalar> = [1, 0, 1].iter().map(|&v| q.from_i64(v)).collect();
        assert!(roots(q, &p).is_empty());
    }

    #[test]
    fn roots_over_prime_field() {
        let f = Field::Prime(5);
        // t^2 + 1 = (t - 2)(t - 3) over GF(5)
        let p: Vec<Scalar> = [1, 0, 1].iter().map(|&v| f.from_i64(v)).collect();
        assert_eq!(roots(f, &p), vec![f.from_i64(2), f.from_i64(3)]);
    }

    #[test]
    fn commutant_of_scalar_family_is_everything() {
        let f = Field::Rational;
        let c = commutant(f, 2, &[Matrix::identity(f, 2)]);
        assert_eq!(c.len(), 4);
        let j = Matrix::from_i64_rows(f, &[&[0, 1], &[0, 0]]);
        let c = commutant(f, 2, std::slice::from_ref(&j));
        assert_eq!(c.len(), 2);
        for x in c {
            assert_eq!(x.mul(&j), j.mul(&x));
        }
    }
}
