use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::leibniz::{catalog, tables, LeibnizAlgebra};
use crate::linalg::vector;
use crate::scalar::Field;

/// Tables drawn at random where full enumeration is out of reach.
const SAMPLED_GF3_DIM3: usize = 24;

/// The same structure constants read in GF(p).
pub fn reduce_mod(alg: &LeibnizAlgebra, p: u32) -> Result<LeibnizAlgebra> {
    let f = Field::prime(p)?;
    let mut entries = Vec::new();
    for (i, j, k, c) in alg.entries() {
        let r = c
            .as_rational()
            .ok_or_else(|| Error::Precondition("only rational algebras can be reduced".into()))?;
        entries.push((i, j, k, f.from_rational(r)?));
    }
    LeibnizAlgebra::from_entries(format!("{}_gf{p}", alg.name()), f, alg.dim(), entries)
}

/// The rational catalog reduced mod `p`.
pub fn catalog_mod(p: u32) -> Vec<LeibnizAlgebra> {
    catalog::standard()
        .iter()
        .filter(|a| a.field() == Field::Rational)
        .filter_map(|a| reduce_mod(a, p).ok())
        .collect()
}

/// Every right Leibniz table over GF(2) of dimension at most 3 and over
/// GF(3) of dimension at most 2, plus seeded samples over GF(3) in dimension 3.
pub fn small_tables() -> &'static [LeibnizAlgebra] {
    static TABLES: OnceLock<Vec<LeibnizAlgebra>> = OnceLock::new();
    TABLES.get_or_init(|| {
        let mut out = Vec::new();
        for (p, top) in [(2, 3), (3, 2)] {
            for n in 1..=top {
                tables::for_each_right_leibniz(p, n, |a| {
                    out.push(a);
                    true
                });
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0003);
        for _ in 0..SAMPLED_GF3_DIM3 {
            out.push(tables::random_right_leibniz(3, 3, 0.7, &mut rng));
        }
        out
    })
}

/// Seeded extensions `L ⊆ Q` over GF(5): `Q` runs over the reduced catalog
/// and `L` is the subalgebra generated by one or two random vectors.
pub fn random_extensions(seed: u64, count: usize) -> Vec<Extension> {
    let bigs = catalog_mod(5);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let q = &bigs[rng.gen_range(0..bigs.len())];
        let gens: Vec<_> = (0..rng.gen_range(1..=2))
            .map(|_| vector::random(q.field(), q.dim(), &mut rng))
            .collect();
        let l = q.generated_subalgebra(&q.span(gens));
        if l.is_zero() {
            continue;
        }
        out.push(Extension::new(q.clone(), l).expect("generated subspaces are subalgebras"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_keeps_identities() {
        for a in catalog_mod(5) {
            assert!(a.is_symmetric(), "{}", a.name());
        }
        assert_eq!(reduce_mod(&catalog::sl2(Field::Rational), 5).unwrap(), catalog::sl2(Field::Prime(5)));
    }

    #[test]
    fn extensions_are_subalgebras() {
        for e in random_extensions(3, 10) {
            assert!(e.big().is_subalgebra(e.small()));
        }
    }
}
