use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::certificate::{Certificate, Method};
use crate::ideals::lattice::{check_enumerable, enumerate_ideals};
use crate::ideals::predicates::multiplication_generators;
use crate::leibniz::{Ideal, LeibnizAlgebra};
use crate::linalg::{poly, vector, Matrix, Subspace};

/// The least essential ideal together with the minimal ideals it sums.
#[derive(Clone, Debug, Serialize)]
pub struct Socle {
    pub ideal: Ideal,
    pub minimal: Vec<Ideal>,
    pub method: Method,
}

/// Matrix of `op` restricted to the invariant subspace `sub`, in the
/// canonical basis of `sub`.
pub fn restrict(op: &Matrix, sub: &Subspace) -> Matrix {
    let cols: Vec<Vec<_>> = sub
        .basis_vectors()
        .iter()
        .map(|u| sub.coords(&op.apply(u)).expect("subspace is invariant"))
        .collect();
    Matrix::from_columns(op.field(), sub.dim(), &cols)
}

/// Subspaces of `I` whose ideal closures may be proper nonzero subideals.
fn split_candidates(alg: &LeibnizAlgebra, i: &Subspace, rng: &mut ChaCha8Rng) -> Vec<Subspace> {
    let mut out = vec![alg.product_space(i, i), i.intersect(&alg.ann(i))];
    let ops = multiplication_generators(alg);
    let restricted: Vec<Matrix> = ops.iter().map(|t| restrict(t, i)).collect();
    let m = i.dim();
    let f = alg.field();
    let embed = |coords: Subspace| -> Subspace {
        alg.span(coords.basis_vectors().iter().map(|c| i.combination(c)).collect())
    };
    let mut central = poly::commutant(f, m, &restricted);
    let extra: Vec<Matrix> = (0..4)
        .filter(|_| central.len() > 1)
        .map(|_| {
            let coeffs: Vec<_> = (0..central.len()).map(|_| f.random(rng)).collect();
            central
                .iter()
                .zip(&coeffs)
                .fold(Matrix::zeros(f, m, m), |acc, (c, s)| acc.add(&c.scale(s)))
        })
        .collect();
    central.extend(extra);
    for c in &central {
        for r in poly::roots(f, &poly::minimal_polynomial(c)) {
            let shifted = c.sub(&Matrix::identity(f, m).scale(&r));
            out.push(embed(shifted.kernel()));
            let image = Subspace::from_vectors(f, m, shifted.columns());
            out.push(embed(image));
        }
    }
    for t in &ops {
        out.push(i.image(t));
        out.push(t.kernel().intersect(i));
    }
    for u in i.basis_vectors() {
        out.push(alg.span(vec![u]));
    }
    for _ in 0..8 {
        let c = vector::random(f, m, rng);
        out.push(alg.span(vec![i.combination(&c)]));
    }
    out
}

/// A nonzero ideal properly inside `i`, if the split search finds one.
fn proper_subideal(alg: &LeibnizAlgebra, i: &Subspace, rng: &mut ChaCha8Rng) -> Option<Ideal> {
    split_candidates(alg, i, rng).into_iter().find_map(|s| {
        if s.is_zero() || !s.is_subspace_of(i) {
            return None;
        }
        let j = alg.ideal_closure(&s);
        (!j.is_zero() && j.dim() < i.dim()).then_some(j)
    })
}

/// Shrinks `start` until the split search finds no proper nonzero subideal.
pub fn refine_to_minimal(alg: &LeibnizAlgebra, start: Ideal, seed: u64) -> Ideal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = start;
    while let Some(j) = proper_subideal(alg, current.space(), &mut rng) {
        current = j;
    }
    current
}

/// Minimal ideals found by split-and-refine: refine the whole algebra to a
/// minimal ideal `M`, then continue inside `Ann(M)` until nothing is left.
pub fn split_minimal_ideals(alg: &LeibnizAlgebra, seed: u64) -> Result<Vec<Ideal>> {
    let mut minimal: Vec<Ideal> = Vec::new();
    let mut region = Ideal::whole(alg);
    while !region.is_zero() {
        let m = refine_to_minimal(alg, region.clone(), seed.wrapping_add(minimal.len() as u64));
        let rest = region.space().intersect(&alg.ann(m.space()));
        if !rest.intersect(m.space()).is_zero() {
            return Err(Error::SocleFailure("minimal ideal meets its own annihilator".into()));
        }
        minimal.push(m);
        region = Ideal::two_sided(alg, rest)
            .map_err(|_| Error::SocleFailure("annihilator region is not an ideal".into()))?;
    }
    Ok(minimal)
}

fn sum_of(alg: &LeibnizAlgebra, ideals: &[&Ideal]) -> Subspace {
    ideals
        .iter()
        .fold(alg.zero_subspace(), |acc, i| acc.sum(i.space()))
}

/// The least essential ideal `E` of a semiprime algebra, computed as the sum
/// of the minimal ideals. The postconditions `E` essential and `[E,E]`
/// generating `E` are checked, and with a complete lattice also that `E` is
/// the intersection of all essential ideals.
pub fn minimal_essential_ideal(alg: &LeibnizAlgebra, semiprime: &Certificate, seed: u64) -> Result<Socle> {
    if !semiprime.verdict {
        return Err(Error::NotSemiprime(format!("{} is not semiprime", alg.name())));
    }
    let (ideal, minimal, method) = if check_enumerable(alg.field(), alg.dim()).is_ok() {
        let lat = enumerate_ideals(alg)?;
        let minimal: Vec<&Ideal> = lat.minimal_ideals();
        let e = sum_of(alg, &minimal);
        if e != lat.essential_intersection(alg) {
            return Err(Error::SocleFailure(
                "sum of minimal ideals differs from the intersection of essential ideals".into(),
            ));
        }
        if !lat.is_essential(&e) && !e.is_full() {
            return Err(Error::SocleFailure("socle is not essential".into()));
        }
        if lat.essential().any(|j| !e.is_subspace_of(j.space())) {
            return Err(Error::SocleFailure("socle is not below every essential ideal".into()));
        }
        let minimal: Vec<Ideal> = minimal.into_iter().cloned().collect();
        (Ideal::two_sided(alg, e)?, minimal, Method::Enumeration)
    } else {
        let minimal = split_minimal_ideals(alg, seed)?;
        let refs: Vec<&Ideal> = minimal.iter().collect();
        let e = sum_of(alg, &refs);
        if !alg.ann(&e).is_zero() {
            return Err(Error::SocleFailure("sum of minimal ideals has nonzero annihilator".into()));
        }
        (Ideal::two_sided(alg, e)?, minimal, Method::Reduction)
    };
    if alg.ideal_power(&ideal, 2).space() != ideal.space() {
        return Err(Error::SocleFailure("E squared differs from E".into()));
    }
    Ok(Socle {
        ideal,
        minimal,
        method,
    })
}
