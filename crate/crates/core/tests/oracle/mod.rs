//! Reference computations written directly from the definitions, sharing
//! no code with the library beyond reading structure constants.
#![allow(dead_code)]

pub mod ext;
pub mod small;

use std::fmt::Debug;

use leibquot_core::{Field, LeibnizAlgebra, Matrix, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

/// Field arithmetic used by the reference computations.
pub trait Arith {
    type E: Clone + PartialEq + Debug;
    fn zero(&self) -> Self::E;
    fn int(&self, v: i64) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn lift(&self, s: &Scalar) -> Self::E;
    fn lower(&self, a: &Self::E) -> Scalar;

    fn one(&self) -> Self::E {
        self.int(1)
    }
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E {
        self.add(a, &self.neg(b))
    }
    fn random<R: Rng>(&self, rng: &mut R) -> Self::E {
        self.int(rng.gen_range(-4..=4))
    }
}

pub struct Rat;

impl Arith for Rat {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn int(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        BigRational::one() / a
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn lift(&self, s: &Scalar) -> BigRational {
        s.as_rational().expect("a rational scalar").clone()
    }
    fn lower(&self, a: &BigRational) -> Scalar {
        Field::Rational.from_rational(a).expect("rationals embed")
    }
}

pub struct Modp(pub u64);

impl Arith for Modp {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn int(&self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.0
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.0 - a) % self.0
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverting zero");
        let (mut base, mut exp, mut acc) = (*a, self.0 - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.0;
            }
            base = base * base % self.0;
            exp >>= 1;
        }
        acc
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn lift(&self, s: &Scalar) -> u64 {
        s.residue().expect("a residue") as u64
    }
    fn lower(&self, a: &u64) -> Scalar {
        Field::Prime(self.0 as u32).from_i64(*a as i64)
    }
}

pub type V<A> = Vec<<A as Arith>::E>;
/// Row-major matrix, or a list of row vectors.
pub type M<A> = Vec<V<A>>;

pub fn zeros<A: Arith>(a: &A, n: usize) -> V<A> {
    vec![a.zero(); n]
}

pub fn unit<A: Arith>(a: &A, n: usize, i: usize) -> V<A> {
    let mut v = zeros(a, n);
    v[i] = a.one();
    v
}

pub fn is_zero_vec<A: Arith>(a: &A, v: &[A::E]) -> bool {
    v.iter().all(|x| a.is_zero(x))
}

pub fn vadd<A: Arith>(a: &A, x: &[A::E], y: &[A::E]) -> V<A> {
    x.iter().zip(y).map(|(u, v)| a.add(u, v)).collect()
}

pub fn vsub<A: Arith>(a: &A, x: &[A::E], y: &[A::E]) -> V<A> {
    x.iter().zip(y).map(|(u, v)| a.sub(u, v)).collect()
}

pub fn vscale<A: Arith>(a: &A, s: &A::E, x: &[A::E]) -> V<A> {
    x.iter().map(|u| a.mul(s, u)).collect()
}

pub fn dot<A: Arith>(a: &A, x: &[A::E], y: &[A::E]) -> A::E {
    x.iter().zip(y).fold(a.zero(), |acc, (u, v)| a.add(&acc, &a.mul(u, v)))
}

pub fn combine<A: Arith>(a: &A, n: usize, coeffs: &[A::E], vectors: &[V<A>]) -> V<A> {
    coeffs
        .iter()
        .zip(vectors)
        .fold(zeros(a, n), |acc, (c, v)| vadd(a, &acc, &vscale(a, c, v)))
}

pub fn random_vec<A: Arith, R: Rng>(a: &A, n: usize, rng: &mut R) -> V<A> {
    (0..n).map(|_| a.random(rng)).collect()
}

pub fn lift_vec<A: Arith>(a: &A, v: &[Scalar]) -> V<A> {
    v.iter().map(|s| a.lift(s)).collect()
}

pub fn lower_vec<A: Arith>(a: &A, v: &[A::E]) -> Vec<Scalar> {
    v.iter().map(|s| a.lower(s)).collect()
}

pub fn lift_mat<A: Arith>(a: &A, m: &Matrix) -> M<A> {
    (0..m.rows()).map(|r| (0..m.cols()).map(|c| a.lift(m.get(r, c))).collect()).collect()
}

/// Reduced row echelon form with zero rows dropped, and its pivot columns.
pub fn rref<A: Arith>(a: &A, mut rows: M<A>, ncols: usize) -> (M<A>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(found) = (r..rows.len()).find(|&i| !a.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, found);
        let inv = a.inv(&rows[r][c]);
        rows[r] = vscale(a, &inv, &rows[r]);
        for i in 0..rows.len() {
            if i != r && !a.is_zero(&rows[i][c]) {
                let f = rows[i][c].clone();
                let scaled = vscale(a, &f, &rows[r]);
                rows[i] = vsub(a, &rows[i], &scaled);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank<A: Arith>(a: &A, rows: &[V<A>], ncols: usize) -> usize {
    rref(a, rows.to_vec(), ncols).1.len()
}

/// An echelon basis of the span of `vectors`.
pub fn span<A: Arith>(a: &A, vectors: &[V<A>], n: usize) -> M<A> {
    rref(a, vectors.to_vec(), n).0
}

pub fn in_span<A: Arith>(a: &A, basis: &[V<A>], v: &[A::E], n: usize) -> bool {
    let mut rows = basis.to_vec();
    rows.push(v.to_vec());
    rank(a, &rows, n) == rank(a, basis, n)
}

pub fn same_span<A: Arith>(a: &A, x: &[V<A>], y: &[V<A>], n: usize) -> bool {
    span(a, x, n) == span(a, y, n)
}

pub fn contained<A: Arith>(a: &A, x: &[V<A>], y: &[V<A>], n: usize) -> bool {
    let r = rank(a, y, n);
    let mut rows = y.to_vec();
    rows.extend(x.iter().cloned());
    rank(a, &rows, n) == r
}

/// Basis of `{x : rows·x = 0}`.
pub fn kernel<A: Arith>(a: &A, rows: &[V<A>], ncols: usize) -> M<A> {
    let (r, pivots) = rref(a, rows.to_vec(), ncols);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut x = unit(a, ncols, free);
        for (row, &p) in r.iter().zip(&pivots) {
            x[p] = a.neg(&row[free]);
        }
        out.push(x);
    }
    out
}

/// Coefficients expressing `target` in the independent `vectors`.
pub fn solve<A: Arith>(a: &A, vectors: &[V<A>], target: &[A::E]) -> Option<V<A>> {
    let m = vectors.len();
    let rows: M<A> = (0..target.len())
        .map(|r| {
            let mut row: V<A> = vectors.iter().map(|v| v[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let (red, pivots) = rref(a, rows, m + 1);
    if pivots.contains(&m) {
        return None;
    }
    let mut c = zeros(a, m);
    for (row, &p) in red.iter().zip(&pivots) {
        c[p] = row[m].clone();
    }
    Some(c)
}

pub fn intersect<A: Arith>(a: &A, x: &[V<A>], y: &[V<A>], n: usize) -> M<A> {
    let mut cols: Vec<V<A>> = x.to_vec();
    cols.extend(y.iter().map(|v| v.iter().map(|s| a.neg(s)).collect::<V<A>>()));
    let rows: M<A> = (0..n).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    let ker = kernel(a, &rows, cols.len());
    let vs: Vec<V<A>> = ker.iter().map(|k| combine(a, n, &k[..x.len()], x)).collect();
    span(a, &vs, n)
}

pub fn identity<A: Arith>(a: &A, n: usize) -> M<A> {
    (0..n).map(|i| unit(a, n, i)).collect()
}

pub fn matmul<A: Arith>(a: &A, x: &M<A>, y: &M<A>) -> M<A> {
    let inner = y.len();
    let cols = y.first().map_or(0, |r| r.len());
    x.iter()
        .map(|row| {
            (0..cols)
                .map(|c| (0..inner).fold(a.zero(), |acc, k| a.add(&acc, &a.mul(&row[k], &y[k][c]))))
                .collect()
        })
        .collect()
}

pub fn matvec<A: Arith>(a: &A, m: &M<A>, v: &[A::E]) -> V<A> {
    m.iter().map(|row| dot(a, row, v)).collect()
}

pub fn madd<A: Arith>(a: &A, x: &M<A>, y: &M<A>) -> M<A> {
    x.iter().zip(y).map(|(r, s)| vadd(a, r, s)).collect()
}

pub fn msub<A: Arith>(a: &A, x: &M<A>, y: &M<A>) -> M<A> {
    x.iter().zip(y).map(|(r, s)| vsub(a, r, s)).collect()
}

pub fn from_columns<A: Arith>(rows: usize, cols: &[V<A>]) -> M<A> {
    (0..rows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
}

pub fn flatten<A: Arith>(m: &M<A>) -> V<A> {
    m.iter().flat_map(|r| r.iter().cloned()).collect()
}

pub fn unflatten<A: Arith>(n: usize, v: &[A::E]) -> M<A> {
    v.chunks(n).map(|c| c.to_vec()).collect()
}

/// Inverse of a square matrix, if it exists.
pub fn inverse<A: Arith>(a: &A, m: &M<A>) -> Option<M<A>> {
    let n = m.len();
    let rows: M<A> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend(unit(a, n, i));
            row
        })
        .collect();
    let (red, pivots) = rref(a, rows, 2 * n);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn determinant<A: Arith>(a: &A, m: &M<A>) -> A::E {
    let n = m.len();
    let mut rows = m.clone();
    let mut det = a.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a.is_zero(&rows[i][c])) else {
            return a.zero();
        };
        if p != c {
            rows.swap(p, c);
            det = a.neg(&det);
        }
        det = a.mul(&det, &rows[c][c]);
        let inv = a.inv(&rows[c][c]);
        for i in c + 1..n {
            if !a.is_zero(&rows[i][c]) {
                let f = a.mul(&rows[i][c], &inv);
                let scaled = vscale(a, &f, &rows[c]);
                rows[i] = vsub(a, &rows[i], &scaled);
            }
        }
    }
    det
}

/// Structure constants read from the library, with the bracket and the
/// multiplication operators evaluated here.
pub struct Alg<'a, A: Arith> {
    pub a: &'a A,
    pub n: usize,
    /// `c[i][j]` holds the coordinates of `[b_i, b_j]`.
    pub c: Vec<Vec<V<A>>>,
}

impl<'a, A: Arith> Alg<'a, A> {
    pub fn of(a: &'a A, lib: &LeibnizAlgebra) -> Self {
        let n = lib.dim();
        let c = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| a.lift(lib.structure_constant(i, j, k))).collect())
                    .collect()
            })
            .collect();
        Alg { a, n, c }
    }

    pub fn from_table(a: &'a A, n: usize, c: Vec<Vec<V<A>>>) -> Self {
        Alg { a, n, c }
    }

    pub fn unit(&self, i: usize) -> V<A> {
        unit(self.a, self.n, i)
    }

    pub fn bracket(&self, x: &[A::E], y: &[A::E]) -> V<A> {
        let a = self.a;
        let mut out = zeros(a, self.n);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !a.is_zero(v)) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !a.is_zero(v)) {
                let s = a.mul(xi, yj);
                out = vadd(a, &out, &vscale(a, &s, &self.c[i][j]));
            }
        }
        out
    }

    /// `u ↦ [u, x]`.
    pub fn right(&self, x: &[A::E]) -> M<A> {
        let cols: Vec<V<A>> = (0..self.n).map(|j| self.bracket(&self.unit(j), x)).collect();
        transpose::<A>(&cols)
    }

    /// `u ↦ [y, u]`.
    pub fn left(&self, y: &[A::E]) -> M<A> {
        let cols: Vec<V<A>> = (0..self.n).map(|j| self.bracket(y, &self.unit(j))).collect();
        transpose::<A>(&cols)
    }

    /// `[x,[y,z]] − [[x,y],z] + [[x,z],y]` on basis elements.
    pub fn right_defect(&self, i: usize, j: usize, k: usize) -> V<A> {
        let (x, y, z) = (self.unit(i), self.unit(j), self.unit(k));
        let lhs = self.bracket(&x, &self.bracket(&y, &z));
        let rhs = vsub(
            self.a,
            &self.bracket(&self.bracket(&x, &y), &z),
            &self.bracket(&self.bracket(&x, &z), &y),
        );
        vsub(self.a, &lhs, &rhs)
    }

    /// `[x,[y,z]] − [[x,y],z] − [y,[x,z]]` on basis elements.
    pub fn left_defect(&self, i: usize, j: usize, k: usize) -> V<A> {
        let (x, y, z) = (self.unit(i), self.unit(j), self.unit(k));
        let lhs = self.bracket(&x, &self.bracket(&y, &z));
        let rhs = vadd(
            self.a,
            &self.bracket(&self.bracket(&x, &y), &z),
            &self.bracket(&y, &self.bracket(&x, &z)),
        );
        vsub(self.a, &lhs, &rhs)
    }

    fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
    }

    pub fn is_right_leibniz(&self) -> bool {
        self.triples().all(|(i, j, k)| is_zero_vec(self.a, &self.right_defect(i, j, k)))
    }

    pub fn is_left_leibniz(&self) -> bool {
        self.triples().all(|(i, j, k)| is_zero_vec(self.a, &self.left_defect(i, j, k)))
    }

    /// `{x : [x, h] = 0 for h in H}`.
    pub fn lan(&self, h: &[V<A>]) -> M<A> {
        let rows: M<A> = h.iter().flat_map(|u| self.right(u)).collect();
        kernel(self.a, &rows, self.n)
    }

    /// `{x : [h, x] = 0 for h in H}`.
    pub fn ran(&self, h: &[V<A>]) -> M<A> {
        let rows: M<A> = h.iter().flat_map(|u| self.left(u)).collect();
        kernel(self.a, &rows, self.n)
    }

    pub fn ann(&self, h: &[V<A>]) -> M<A> {
        let rows: M<A> = h.iter().flat_map(|u| self.right(u).into_iter().chain(self.left(u))).collect();
        kernel(self.a, &rows, self.n)
    }

    pub fn full(&self) -> M<A> {
        identity(self.a, self.n)
    }

    /// Functionals cutting out the span of `s`.
    pub fn equations(&self, s: &[V<A>]) -> M<A> {
        kernel(self.a, s, self.n)
    }

    pub fn is_ideal(&self, s: &[V<A>]) -> bool {
        let eq = self.equations(s);
        s.iter().all(|u| {
            (0..self.n).all(|i| {
                let e = self.unit(i);
                let (r, l) = (self.bracket(u, &e), self.bracket(&e, u));
                eq.iter().all(|w| self.a.is_zero(&dot(self.a, w, &r)) && self.a.is_zero(&dot(self.a, w, &l)))
            })
        })
    }

    /// The smallest subspace containing `start` and stable under `R_x`, `L_x`
    /// for `x` in `by`.
    pub fn stable_span(&self, start: &[V<A>], by: &[V<A>]) -> M<A> {
        let ops: Vec<M<A>> = by.iter().flat_map(|x| [self.right(x), self.left(x)]).collect();
        let mut basis = span(self.a, start, self.n);
        let mut frontier = basis.clone();
        while let Some(v) = frontier.pop() {
            for op in &ops {
                let w = matvec(self.a, op, &v);
                if !in_span(self.a, &basis, &w, self.n) {
                    basis.push(w.clone());
                    basis = span(self.a, &basis, self.n);
                    frontier.push(w);
                }
            }
        }
        basis
    }

    /// Structure constants of the subalgebra spanned by the independent `basis`.
    pub fn restrict(&self, basis: &[V<A>]) -> Option<Alg<'a, A>> {
        let mut c = Vec::with_capacity(basis.len());
        for x in basis {
            let mut row = Vec::with_capacity(basis.len());
            for y in basis {
                row.push(solve(self.a, basis, &self.bracket(x, y))?);
            }
            c.push(row);
        }
        Some(Alg::from_table(self.a, basis.len(), c))
    }

    /// Killing form `tr(ad_x ad_y)` with `ad_x = L_x`.
    pub fn killing(&self) -> M<A> {
        let ads: Vec<M<A>> = (0..self.n).map(|i| self.left(&self.unit(i))).collect();
        (0..self.n)
            .map(|i| (0..self.n).map(|j| trace(self.a, &matmul(self.a, &ads[i], &ads[j]))).collect())
            .collect()
    }
}

pub fn transpose<A: Arith>(cols: &[V<A>]) -> M<A> {
    let Some(first) = cols.first() else {
        return Vec::new();
    };
    (0..first.len()).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
}

pub fn trace<A: Arith>(a: &A, m: &M<A>) -> A::E {
    (0..m.len()).fold(a.zero(), |acc, i| a.add(&acc, &m[i][i]))
}

/// Basis (flattened) of the associative algebra generated by `gens`,
/// with the identity adjoined when `unital`.
pub fn assoc_closure<A: Arith>(a: &A, n: usize, gens: &[M<A>], unital: bool) -> M<A> {
    let nn = n * n;
    let mut start: Vec<V<A>> = gens.iter().map(|g| flatten::<A>(g)).collect();
    if unital {
        start.push(flatten::<A>(&identity(a, n)));
    }
    let mut basis = span(a, &start, nn);
    let mut frontier = basis.clone();
    while let Some(v) = frontier.pop() {
        let m = unflatten::<A>(n, &v);
        for g in gens {
            let w = flatten::<A>(&matmul(a, g, &m));
            if !in_span(a, &basis, &w, nn) {
                basis.push(w.clone());
                basis = span(a, &basis, nn);
                frontier.push(w);
            }
        }
    }
    basis
}

/// The right and left multiplications by a basis of `x`.
pub fn multiplications<A: Arith>(alg: &Alg<'_, A>, x: &[V<A>]) -> Vec<M<A>> {
    x.iter().flat_map(|u| [alg.right(u), alg.left(u)]).collect()
}

/// Every vector of `F_p^n` with first nonzero coordinate equal to one.
pub fn projective_points(p: u64, n: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let total = p.pow(n as u32);
    for code in 1..total {
        let mut v = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            v.push(c % p);
            c /= p;
        }
        if v.iter().find(|&&x| x != 0) == Some(&1) {
            out.push(v);
        }
    }
    out
}

/// Runs `f` with the arithmetic of `field`.
pub fn with_field<R>(field: Field, rat: impl FnOnce(&Rat) -> R, fp: impl FnOnce(&Modp) -> R) -> R {
    match field {
        Field::Rational => rat(&Rat),
        Field::Prime(p) => fp(&Modp(p as u64)),
    }
}
