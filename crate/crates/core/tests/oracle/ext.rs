//! Extensions `L ⊆ Q` given by a basis of `L` in the coordinates of `Q`.

use super::{
    assoc_closure, combine, dot, is_zero_vec, kernel, multiplications, solve, span, transpose, unit, Alg, Arith, M, V,
};

type Map<'f, A> = &'f dyn Fn(&[<A as Arith>::E]) -> V<A>;

/// Rows of the conditions `f(x) ∈ W` on `x = Σ c_k l_k`, where `W` is cut out
/// by `eqs` and `f` runs over `maps`.
fn conditions<A: Arith>(a: &A, l: &[V<A>], eqs: &[V<A>], maps: &[Map<'_, A>]) -> M<A> {
    let mut rows = Vec::new();
    for f in maps {
        let images: Vec<V<A>> = l.iter().map(|x| f(x)).collect();
        for w in eqs {
            rows.push(images.iter().map(|v| dot(a, w, v)).collect());
        }
    }
    rows
}

/// The smallest subspace containing `q` that is stable under multiplication by `L`.
pub fn lq_span<A: Arith>(q: &Alg<'_, A>, l: &[V<A>], x: &[A::E]) -> M<A> {
    q.stable_span(&[x.to_vec()], l)
}

/// `(L : x)`: elements of `L` whose brackets with `_L(x)` on both sides stay in `L`.
pub fn colon<A: Arith>(q: &Alg<'_, A>, l: &[V<A>], x: &[A::E]) -> M<A> {
    let a = q.a;
    let eqs = q.equations(l);
    let mut rows = Vec::new();
    for u in lq_span(q, l, x) {
        let left = |y: &[A::E]| q.bracket(y, &u);
        let right = |y: &[A::E]| q.bracket(&u, y);
        rows.extend(conditions(a, l, &eqs, &[&left, &right]));
    }
    let ker = kernel(a, &rows, l.len());
    span(a, &ker.iter().map(|c| combine(a, q.n, c, l)).collect::<Vec<_>>(), q.n)
}

/// The largest ideal of `L` inside `{y ∈ L : [y, x], [x, y] ∈ L}`, found by
/// shrinking until stable.
pub fn absorbing_ideal<A: Arith>(q: &Alg<'_, A>, l: &[V<A>], x: &[A::E]) -> M<A> {
    let a = q.a;
    let eqs = q.equations(l);
    let left = |y: &[A::E]| q.bracket(y, x);
    let right = |y: &[A::E]| q.bracket(x, y);
    let rows = conditions(a, l, &eqs, &[&left, &right]);
    let mut cur: M<A> = kernel(a, &rows, l.len()).iter().map(|c| combine(a, q.n, c, l)).collect();
    loop {
        let eqs = q.equations(&cur);
        let mut rows = Vec::new();
        for y in l {
            let left = |z: &[A::E]| q.bracket(z, y);
            let right = |z: &[A::E]| q.bracket(y, z);
            rows.extend(conditions(a, &cur, &eqs, &[&left, &right]));
        }
        let next: M<A> = kernel(a, &rows, cur.len()).iter().map(|c| combine(a, q.n, c, &cur)).collect();
        if next.len() == cur.len() {
            return span(a, &cur, q.n);
        }
        cur = next;
    }
}

/// `Ann_L(I)` for `I ⊆ L`, in coordinates along the basis of `L`.
pub fn ann_in_l<A: Arith>(q: &Alg<'_, A>, l: &[V<A>], i: &[V<A>]) -> M<A> {
    let mut rows = Vec::new();
    for m in i {
        for side in 0..2 {
            let images: Vec<V<A>> = l
                .iter()
                .map(|y| if side == 0 { q.bracket(y, m) } else { q.bracket(m, y) })
                .collect();
            for r in 0..q.n {
                rows.push(images.iter().map(|v| v[r].clone()).collect());
            }
        }
    }
    kernel(q.a, &rows, l.len())
}

/// Whether no nonzero `p` is annihilated on both sides by `(L : x)`.
pub fn separated_at<A: Arith>(q: &Alg<'_, A>, l: &[V<A>], x: &[A::E]) -> bool {
    q.ann(&colon(q, l, x)).is_empty()
}

/// Whether some ideal with zero annihilator in `L` absorbs `x` into `L`
/// and brackets nontrivially with it.
pub fn absorbed_at<A: Arith>(q: &Alg<'_, A>, l: &[V<A>], x: &[A::E]) -> bool {
    let m = absorbing_ideal(q, l, x);
    ann_in_l(q, l, &m).is_empty()
        && m
            .iter()
            .any(|y| !is_zero_vec(q.a, &q.bracket(y, x)) || !is_zero_vec(q.a, &q.bracket(x, y)))
}

/// Quotient property tested at `x = 0` and at every listed point.
pub fn is_quotient<A: Arith>(q: &Alg<'_, A>, l: &[V<A>], points: &[V<A>]) -> bool {
    q.ann(l).is_empty() && points.iter().all(|x| separated_at(q, l, x))
}

pub fn is_absorbed<A: Arith>(q: &Alg<'_, A>, l: &[V<A>], points: &[V<A>]) -> bool {
    points.iter().all(|x| absorbed_at(q, l, x))
}

/// Flattened basis of `M(Q)`.
pub fn multiplication_algebra<A: Arith>(q: &Alg<'_, A>) -> M<A> {
    assoc_closure(q.a, q.n, &multiplications(q, &q.full()), true)
}

/// Flattened basis of `A(Q)`.
pub fn operator_algebra<A: Arith>(q: &Alg<'_, A>) -> M<A> {
    assoc_closure(q.a, q.n, &multiplications(q, &q.full()), false)
}

/// Elements of the flattened operator space `ops` vanishing on `l`, as coefficient vectors.
pub fn vanishing<A: Arith>(q: &Alg<'_, A>, ops: &[V<A>], l: &[V<A>]) -> M<A> {
    let n = q.n;
    let mut rows = Vec::new();
    for x in l {
        let images: Vec<V<A>> = ops
            .iter()
            .map(|o| (0..n).map(|r| dot(q.a, &o[r * n..(r + 1) * n], x)).collect())
            .collect();
        for r in 0..n {
            rows.push(images.iter().map(|v| v[r].clone()).collect());
        }
    }
    kernel(q.a, &rows, ops.len())
}

/// No nonzero element of `M(Q)` annihilates `L`.
pub fn is_dense<A: Arith>(q: &Alg<'_, A>, l: &[V<A>]) -> bool {
    vanishing(q, &multiplication_algebra(q), l).is_empty()
}

/// Partial derivations `I → L` of an algebra, with `I` given by a basis in
/// its coordinates; each map is an `n × dim I` matrix.
pub fn partial_derivations<A: Arith>(alg: &Alg<'_, A>, i: &[V<A>]) -> Vec<M<A>> {
    let a = alg.a;
    let (n, d) = (alg.n, i.len());
    let var = |r: usize, t: usize| r * d + t;
    let mut rows = Vec::new();
    for s in 0..d {
        for t in 0..d {
            let gamma = solve(a, i, &alg.bracket(&i[s], &i[t])).expect("I is closed under the bracket");
            for r in 0..n {
                let mut row = vec![a.zero(); n * d];
                for (u, g) in gamma.iter().enumerate() {
                    row[var(r, u)] = a.add(&row[var(r, u)], g);
                }
                for rp in 0..n {
                    let b = unit(a, n, rp);
                    let first = &alg.bracket(&b, &i[t])[r];
                    let second = &alg.bracket(&i[s], &b)[r];
                    row[var(rp, s)] = a.sub(&row[var(rp, s)], first);
                    row[var(rp, t)] = a.sub(&row[var(rp, t)], second);
                }
                rows.push(row);
            }
        }
    }
    kernel(a, &rows, n * d)
        .into_iter()
        .map(|v| v.chunks(d).map(|c| c.to_vec()).collect())
        .collect()
}

/// Whether `δ` (columns are images of the basis of `I`) satisfies the derivation rule on `I`.
pub fn is_partial_derivation<A: Arith>(alg: &Alg<'_, A>, i: &[V<A>], delta: &M<A>) -> bool {
    let a = alg.a;
    let cols = transpose::<A>(delta);
    let apply = |x: &[A::E]| combine(a, alg.n, &solve(a, i, x).expect("x lies in I"), &cols);
    i.iter().all(|x| {
        i.iter().all(|y| {
            let lhs = apply(&alg.bracket(x, y));
            let rhs = super::vadd(a, &alg.bracket(&apply(x), y), &alg.bracket(x, &apply(y)));
            lhs == rhs
        })
    })
}
