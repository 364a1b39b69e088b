//! Search over structure-constant tables of right Leibniz algebras over
//! small prime fields.
//!
//! Products `[b_i, b_j]` are assigned one at a time in row-major order and
//! every basis triple whose identity has become fully determined is checked
//! immediately, which prunes most of the search tree.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::leibniz::algebra::LeibnizAlgebra;
use crate::scalar::Field;

struct Search {
    p: u32,
    n: usize,
    /// `table[i * n + j]` is the product vector, valid when `set[i * n + j]`.
    table: Vec<Vec<u32>>,
    set: Vec<bool>,
    values: Vec<Vec<u32>>,
}

impl Search {
    fn new(p: u32, n: usize) -> Self {
        let count = (p as usize).pow(n as u32);
        let values = (0..count)
            .map(|mut code| {
                (0..n)
                    .map(|_| {
                        let d = (code % p as usize) as u32;
                        code /= p as usize;
                        d
                    })
                    .collect()
            })
            .collect();
        Search {
            p,
            n,
            table: vec![vec![0; n]; n * n],
            set: vec![false; n * n],
            values,
        }
    }

    /// `[a, b_j]`-style product `[v, b_k]` when every needed entry is known.
    fn left_mul(&self, v: &[u32], k: usize) -> Option<Vec<u32>> {
        let mut out = vec![0u32; self.n];
        for (m, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let idx = m * self.n + k;
            if !self.set[idx] {
                return None;
            }
            for (o, &t) in out.iter_mut().zip(&self.table[idx]) {
                *o = (*o + c * t) % self.p;
            }
        }
        Some(out)
    }

    /// `[b_i, v]` when every needed entry is known.
    fn right_mul(&self, i: usize, v: &[u32]) -> Option<Vec<u32>> {
        let mut out = vec![0u32; self.n];
        for (m, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let idx = i * self.n + m;
            if !self.set[idx] {
                return None;
            }
            for (o, &t) in out.iter_mut().zip(&self.table[idx]) {
                *o = (*o + c * t) % self.p;
            }
        }
        Some(out)
    }

    fn product(&self, i: usize, j: usize) -> Option<&[u32]> {
        let idx = i * self.n + j;
        self.set[idx].then(|| self.table[idx].as_slice())
    }

    /// `false` only if some determined triple violates the right identity.
    fn consistent(&self) -> bool {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (Some(yz), Some(xy), Some(xz)) =
                        (self.product(j, k), self.product(i, j), self.product(i, k))
                    else {
                        continue;
                    };
                    let (Some(lhs), Some(a), Some(b)) =
                        (self.right_mul(i, yz), self.left_mul(xy, k), self.left_mul(xz, j))
                    else {
                        continue;
                    };
                    let ok = lhs
                        .iter()
                        .zip(a.iter().zip(&b))
                        .all(|(&l, (&a, &b))| (a + self.p - b) % self.p == l);
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn to_algebra(&self, name: String) -> LeibnizAlgebra {
        let field = Field::Prime(self.p);
        let products = self
            .table
            .iter()
            .map(|v| v.iter().map(|&c| field.from_i64(i64::from(c))).collect())
            .collect();
        LeibnizAlgebra::from_products(name, field, self.n, products)
    }

    fn exhaust(&mut self, pos: usize, visit: &mut dyn FnMut(&Search) -> bool) -> bool {
        if pos == self.n * self.n {
            return visit(self);
        }
        for v in 0..self.values.len() {
            self.table[pos].clone_from(&self.values[v]);
            self.set[pos] = true;
            if self.consistent() && !self.exhaust(pos + 1, visit) {
                self.set[pos] = false;
                return false;
            }
        }
        self.set[pos] = false;
        true
    }

    fn sample<R: Rng + ?Sized>(&mut self, pos: usize, rng: &mut R, zero_bias: f64, budget: &mut usize) -> bool {
        if pos == self.n * self.n {
            return true;
        }
        let mut order: Vec<usize> = (1..self.values.len()).collect();
        order.shuffle(rng);
        if rng.gen_bool(zero_bias) {
            order.insert(0, 0);
        } else {
            order.push(0);
        }
        for v in order {
            if *budget == 0 {
                break;
            }
            *budget -= 1;
            self.table[pos].clone_from(&self.values[v]);
            self.set[pos] = true;
            if self.consistent() && self.sample(pos + 1, rng, zero_bias, budget) {
                return true;
            }
        }
        self.set[pos] = false;
        false
    }
}

/// Visits every right Leibniz table of dimension `n` over GF(p); the visitor
/// returns `false` to stop early. Returns the number of tables visited.
pub fn for_each_right_leibniz<F>(p: u32, n: usize, mut visit: F) -> usize
where
    F: FnMut(LeibnizAlgebra) -> bool,
{
    let mut search = Search::new(p, n);
    let mut count = 0usize;
    let mut cb = |s: &Search| {
        count += 1;
        visit(s.to_algebra(format!("gf{p}_dim{n}_#{}", count - 1)))
    };
    search.exhaust(0, &mut cb);
    count
}

/// Draws a right Leibniz table at random by randomized depth-first search.
/// `zero_bias` is the probability of trying the zero product first at each
/// position; it keeps the search from wandering into dead subtrees.
pub fn random_right_leibniz<R: Rng + ?Sized>(p: u32, n: usize, zero_bias: f64, rng: &mut R) -> LeibnizAlgebra {
    loop {
        let mut search = Search::new(p, n);
        let mut budget = 20_000usize;
        if search.sample(0, rng, zero_bias, &mut budget) {
            return search.to_algebra(format!("gf{p}_dim{n}_random"));
        }
    }
}
