//! Brute force over algebras with at most 128 elements: every element is an
//! index and every subspace a bit mask over the indices.

use super::{Alg, Arith, Modp};

pub const MAX_ELEMENTS: usize = 128;

pub struct Tiny {
    pub p: u64,
    pub n: usize,
    pub size: usize,
    add: Vec<usize>,
    scale: Vec<usize>,
    br: Vec<usize>,
}

pub type Set = u128;

pub const ZERO: Set = 1;

fn members(s: Set) -> impl Iterator<Item = usize> {
    (0..MAX_ELEMENTS).filter(move |&i| s >> i & 1 == 1)
}

impl Tiny {
    pub fn new(alg: &Alg<'_, Modp>) -> Option<Tiny> {
        let p = alg.a.0;
        let n = alg.n;
        let size = (p as usize).checked_pow(n as u32)?;
        if size > MAX_ELEMENTS {
            return None;
        }
        let vecs: Vec<Vec<u64>> = (0..size).map(|i| Self::decode(p, n, i)).collect();
        let encode = |v: &[u64]| v.iter().rev().fold(0usize, |acc, &x| acc * p as usize + x as usize);
        let a = alg.a;
        let mut add = vec![0; size * size];
        let mut br = vec![0; size * size];
        for (i, x) in vecs.iter().enumerate() {
            for (j, y) in vecs.iter().enumerate() {
                let s: Vec<u64> = x.iter().zip(y).map(|(u, v)| a.add(u, v)).collect();
                add[i * size + j] = encode(&s);
                br[i * size + j] = encode(&alg.bracket(x, y));
            }
        }
        let mut scale = vec![0; p as usize * size];
        for c in 0..p {
            for (i, x) in vecs.iter().enumerate() {
                let s: Vec<u64> = x.iter().map(|u| a.mul(&c, u)).collect();
                scale[c as usize * size + i] = encode(&s);
            }
        }
        Some(Tiny {
            p,
            n,
            size,
            add,
            scale,
            br,
        })
    }

    pub fn decode(p: u64, n: usize, mut i: usize) -> Vec<u64> {
        let mut v = Vec::with_capacity(n);
        for _ in 0..n {
            v.push((i % p as usize) as u64);
            i /= p as usize;
        }
        v
    }

    pub fn vector(&self, i: usize) -> Vec<u64> {
        Self::decode(self.p, self.n, i)
    }

    fn basis(&self) -> Vec<usize> {
        (0..self.n).map(|k| (self.p as usize).pow(k as u32)).collect()
    }

    pub fn bracket(&self, x: usize, y: usize) -> usize {
        self.br[x * self.size + y]
    }

    fn extend(&self, s: Set, v: usize) -> Set {
        let mut out = s;
        for x in members(s) {
            for c in 1..self.p as usize {
                out |= 1 << self.add[x * self.size + self.scale[c * self.size + v]];
            }
        }
        out
    }

    /// Every subspace, found by adjoining one vector at a time.
    pub fn subspaces(&self) -> Vec<Set> {
        let mut seen = vec![ZERO];
        let mut next = 0;
        while next < seen.len() {
            let s = seen[next];
            next += 1;
            for v in 0..self.size {
                if s >> v & 1 == 0 {
                    let t = self.extend(s, v);
                    if !seen.contains(&t) {
                        seen.push(t);
                    }
                }
            }
        }
        seen.sort_unstable();
        seen
    }

    pub fn is_ideal(&self, s: Set) -> bool {
        let basis = self.basis();
        members(s).all(|x| {
            basis
                .iter()
                .all(|&e| s >> self.bracket(x, e) & 1 == 1 && s >> self.bracket(e, x) & 1 == 1)
        })
    }

    /// `[H, L] ⊆ H`.
    pub fn is_right_ideal(&self, s: Set) -> bool {
        let basis = self.basis();
        members(s).all(|x| basis.iter().all(|&e| s >> self.bracket(x, e) & 1 == 1))
    }

    pub fn ideals(&self, spaces: &[Set]) -> Vec<Set> {
        spaces.iter().copied().filter(|&s| self.is_ideal(s)).collect()
    }

    fn collect(&self, keep: impl Fn(usize) -> bool) -> Set {
        (0..self.size).filter(|&x| keep(x)).fold(0, |acc, x| acc | 1 << x)
    }

    pub fn lan(&self, h: Set) -> Set {
        self.collect(|x| members(h).all(|y| self.bracket(x, y) == 0))
    }

    pub fn ran(&self, h: Set) -> Set {
        self.collect(|x| members(h).all(|y| self.bracket(y, x) == 0))
    }

    pub fn ann(&self, h: Set) -> Set {
        self.lan(h) & self.ran(h)
    }

    pub fn full(&self) -> Set {
        self.collect(|_| true)
    }

    pub fn products_vanish(&self, i: Set, j: Set) -> bool {
        members(i).all(|x| members(j).all(|y| self.bracket(x, y) == 0))
    }

    pub fn is_semiprime(&self, ideals: &[Set]) -> bool {
        ideals.iter().filter(|&&i| i != ZERO).all(|&i| !self.products_vanish(i, i))
    }

    pub fn is_prime(&self, ideals: &[Set]) -> bool {
        let nonzero: Vec<Set> = ideals.iter().copied().filter(|&i| i != ZERO).collect();
        nonzero.iter().all(|&i| nonzero.iter().all(|&j| !self.products_vanish(i, j)))
    }

    pub fn is_essential(&self, i: Set, ideals: &[Set]) -> bool {
        ideals.iter().filter(|&&j| j != ZERO).all(|&j| i & j != ZERO)
    }
}
