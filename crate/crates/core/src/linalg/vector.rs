//! Small helpers on coordinate vectors (`[Scalar]`).

use crate::scalar::{Field, Scalar};

pub fn zero(field: Field, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

/// The `i`-th standard basis vector.
pub fn unit(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Scalar], s: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| x * s).collect()
}

pub fn neg(a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| -x).collect()
}

/// `acc += s * v`.
pub fn axpy(acc: &mut [Scalar], s: &Scalar, v: &[Scalar]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(s * x);
        }
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = match a.first() {
        Some(s) => s.field().zero(),
        None => return Field::Rational.zero(),
    };
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
    }
    acc
}

/// Linear combination `Σ coeffs[i] * vectors[i]`.
pub fn combine(field: Field, n: usize, coeffs: &[Scalar], vectors: &[Vec<Scalar>]) -> Vec<Scalar> {
    let mut acc = zero(field, n);
    for (c, v) in coeffs.iter().zip(vectors) {
        axpy(&mut acc, c, v);
    }
    acc
}

pub fn from_i64(field: Field, values: &[i64]) -> Vec<Scalar> {
    values.iter().map(|&v| field.from_i64(v)).collect()
}

pub fn random<R: rand::Rng + ?Sized>(field: Field, n: usize, rng: &mut R) -> Vec<Scalar> {
    (0..n).map(|_| field.random(rng)).collect()
}

pub fn to_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}
