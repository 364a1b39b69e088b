use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ideals::certificate::{Certificate, Method, Witness};
use crate::ideals::lattice::{check_enumerable, enumerate_ideals, IdealLattice};
use crate::ideals::socle;
use crate::leibniz::{Ideal, LeibnizAlgebra};
use crate::linalg::{poly, vector, Subspace};

/// Seed used by every seeded search unless the caller overrides it.
pub const DEFAULT_SEED: u64 = 0xC0FFEE;

/// Number of random vectors drawn by witness searches.
pub const RANDOM_SAMPLES: usize = 32;

/// Whether a predicate may, must, or must not use the enumeration oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Enumerate when the field is finite and the lattice is under the cap.
    Auto,
    /// Enumerate or fail.
    Oracle,
    /// Never enumerate.
    NoOracle,
}

/// Optional knowledge that sharpens the essential-ideal test.
#[derive(Clone, Copy, Debug, Default)]
pub struct Context<'a> {
    pub lattice: Option<&'a IdealLattice>,
    pub semiprime: Option<&'a Certificate>,
    pub seed: u64,
}

impl<'a> Context<'a> {
    pub fn new(seed: u64) -> Self {
        Context {
            lattice: None,
            semiprime: None,
            seed,
        }
    }

    pub fn with_lattice(mut self, lattice: &'a IdealLattice) -> Self {
        self.lattice = Some(lattice);
        self
    }

    pub fn with_semiprime(mut self, cert: &'a Certificate) -> Self {
        self.semiprime = Some(cert);
        self
    }
}

/// `Ann_L(I) = 0`, decided by a kernel computation.
pub fn is_sturdy(alg: &LeibnizAlgebra, ideal: &Ideal) -> Certificate {
    let ann = alg.ann(ideal.space());
    if ann.is_zero() {
        Certificate::proven(Method::Reduction)
    } else {
        Certificate::refuted(Method::Reduction, Witness::Vector(ann.basis_vector(0).to_vec()))
    }
}

/// Whether `ideal` meets every nonzero ideal.
pub fn is_essential(alg: &LeibnizAlgebra, ideal: &Ideal, ctx: &Context<'_>) -> Certificate {
    let i = ideal.space();
    if i.is_full() {
        return Certificate::proven(Method::Reduction);
    }
    if let Some(lat) = ctx.lattice.filter(|l| l.is_complete()) {
        return match lat.nonzero().find(|j| i.intersect(j.space()).is_zero()) {
            Some(j) => Certificate::refuted(Method::Enumeration, Witness::Ideal(j.space().clone())),
            None => Certificate::proven(Method::Enumeration),
        };
    }
    let ann = alg.ann(i);
    if ann.is_zero() {
        return Certificate::proven(Method::Reduction).with_note("zero annihilator");
    }
    if ctx.semiprime.is_some_and(Certificate::is_certified_true)
        && Ideal::two_sided(alg, ann.clone()).is_ok()
        && ann.intersect(i).is_zero()
    {
        return Certificate::refuted(Method::Reduction, Witness::Ideal(ann))
            .with_note("semiprime algebra with nonzero annihilator");
    }
    let mut candidates = vec![alg.ideal_closure(&ann)];
    candidates.extend(ann.basis_vectors().into_iter().map(|v| alg.ideal_closure(&alg.span(vec![v]))));
    candidates.extend(candidate_ideals(alg, ctx.seed));
    match candidates
        .into_iter()
        .find(|j| !j.is_zero() && j.space().intersect(i).is_zero())
    {
        Some(j) => Certificate::refuted(Method::Reduction, Witness::Ideal(j.into_space()))
            .with_note("disjoint ideal found by seeded search"),
        None => Certificate::unrefuted(ctx.seed),
    }
}

/// Principal ideals of basis vectors, annihilator-based ideals, and
/// principal ideals of seeded random vectors.
pub fn candidate_ideals(alg: &LeibnizAlgebra, seed: u64) -> Vec<Ideal> {
    let full = alg.full();
    let mut spaces: Vec<Subspace> = vec![
        alg.ann(&full),
        alg.lan(&full),
        alg.ran(&full),
        alg.leibniz_kernel(),
        alg.product_space(&full, &full),
    ];
    for k in 0..alg.dim() {
        spaces.push(alg.span(vec![alg.unit(k)]));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_SAMPLES {
        let v = vector::random(alg.field(), alg.dim(), &mut rng);
        if !vector::is_zero(&v) {
            spaces.push(alg.span(vec![v]));
        }
    }
    let mut out: Vec<Ideal> = Vec::new();
    for s in spaces {
        let i = alg.ideal_closure(&s);
        if !i.is_zero() && !out.iter().any(|o| o.space() == i.space()) {
            out.push(i);
        }
    }
    out
}

/// A nonzero ideal `X ⊆ J` with `[X, X] = 0`, if one is reachable from `J`
/// through annihilators or the derived series.
pub fn square_zero_inside(alg: &LeibnizAlgebra, j: &Ideal) -> Option<Ideal> {
    if j.is_zero() {
        return None;
    }
    let meet = j.space().intersect(&alg.ann(j.space()));
    if !meet.is_zero() {
        if let Ok(x) = Ideal::two_sided(alg, meet) {
            if alg.product_space(x.space(), x.space()).is_zero() {
                return Some(x);
            }
        }
    }
    let mut current = j.clone();
    loop {
        let sq = alg.product_space(current.space(), current.space());
        if sq.is_zero() {
            return Some(current);
        }
        let next = alg.ideal_closure(&sq);
        if next.space() == current.space() {
            return None;
        }
        current = next;
    }
}

/// Whether the algebra is a Lie algebra: right Leibniz with `[x, x] = 0`.
pub fn is_lie(alg: &LeibnizAlgebra) -> bool {
    alg.is_right_leibniz() && alg.leibniz_kernel().is_zero()
}

fn use_oracle(alg: &LeibnizAlgebra, strategy: Strategy) -> Result<bool> {
    match strategy {
        Strategy::NoOracle => Ok(false),
        Strategy::Oracle => check_enumerable(alg.field(), alg.dim()).map(|_| true),
        Strategy::Auto => Ok(check_enumerable(alg.field(), alg.dim()).is_ok()),
    }
}

/// No nonzero ideal `I` with `[I, I] = 0`.
pub fn is_semiprime(alg: &LeibnizAlgebra, strategy: Strategy, seed: u64) -> Result<Certificate> {
    if use_oracle(alg, strategy)? {
        let lat = enumerate_ideals(alg)?;
        return Ok(semiprime_from_lattice(alg, &lat));
    }
    Ok(semiprime_by_reduction(alg, seed))
}

pub fn semiprime_from_lattice(alg: &LeibnizAlgebra, lat: &IdealLattice) -> Certificate {
    match lat
        .nonzero()
        .find(|i| alg.product_space(i.space(), i.space()).is_zero())
    {
        Some(i) => Certificate::refuted(Method::Enumeration, Witness::Ideal(i.space().clone())),
        None => Certificate::proven(Method::Enumeration),
    }
}

fn semiprime_by_reduction(alg: &LeibnizAlgebra, seed: u64) -> Certificate {
    if alg.dim() == 0 {
        return Certificate::proven(Method::Reduction);
    }
    if is_lie(alg) && alg.killing_form().rank() == alg.dim() {
        return Certificate::proven(Method::Reduction).with_note("Lie algebra with nondegenerate Killing form");
    }
    let mut starts = Vec::new();
    if is_lie(alg) {
        let radical = alg.killing_form().kernel();
        starts.push(alg.ideal_closure(&radical));
    }
    starts.push(alg.ideal_closure(&alg.leibniz_kernel()));
    starts.extend(candidate_ideals(alg, seed));
    for j in &starts {
        if let Some(x) = square_zero_inside(alg, j) {
            return Certificate::refuted(Method::Reduction, Witness::Ideal(x.into_space()))
                .with_note("nonzero ideal with zero square");
        }
    }
    Certificate::unrefuted(seed)
}

/// No two nonzero ideals `I, J` with `[I, J] = 0`.
pub fn is_prime(alg: &LeibnizAlgebra, strategy: Strategy, seed: u64) -> Result<Certificate> {
    if use_oracle(alg, strategy)? {
        let lat = enumerate_ideals(alg)?;
        return prime_from_lattice(alg, &lat);
    }
    Ok(prime_by_reduction(alg, seed))
}

/// Decides primeness from a complete lattice by two independent criteria:
/// all pairs of nonzero ideals, and `ran_L(I) = 0` for every nonzero `I`.
pub fn prime_from_lattice(alg: &LeibnizAlgebra, lat: &IdealLattice) -> Result<Certificate> {
    let nonzero: Vec<&Ideal> = lat.nonzero().collect();
    let pair = nonzero.iter().find_map(|i| {
        nonzero
            .iter()
            .find(|j| alg.product_space(i.space(), j.space()).is_zero())
            .map(|j| (i.space().clone(), j.space().clone()))
    });
    let ran_witness = nonzero.iter().find(|i| !alg.ran(i.space()).is_zero());
    match (pair, ran_witness) {
        (None, None) => Ok(Certificate::proven(Method::Enumeration)),
        (Some((i, j)), Some(_)) => Ok(Certificate::refuted(Method::Enumeration, Witness::IdealPair(i, j))),
        (p, r) => Err(Error::InternalFault(format!(
            "prime criteria disagree: pair search {}, right-annihilator search {}",
            p.is_some(),
            r.is_some()
        ))),
    }
}

fn prime_by_reduction(alg: &LeibnizAlgebra, seed: u64) -> Certificate {
    let semi = semiprime_by_reduction(alg, seed);
    if semi.is_certified_false() {
        if let Some(Witness::Ideal(j)) = &semi.witness {
            return Certificate::refuted(Method::Reduction, Witness::IdealPair(j.clone(), j.clone()))
                .with_note("not semiprime");
        }
    }
    if semi.is_certified_true() && !alg.field().is_finite() && is_lie(alg) {
        if let Ok(found) = socle::split_minimal_ideals(alg, seed) {
            if found.len() >= 2 {
                let (a, b) = (found[0].space().clone(), found[1].space().clone());
                if alg.product_space(&a, &b).is_zero() {
                    return Certificate::refuted(Method::Reduction, Witness::IdealPair(a, b))
                        .with_note("two distinct minimal ideals");
                }
            }
        }
        let ops = multiplication_generators(alg);
        if poly::commutant(alg.field(), alg.dim(), &ops).len() == 1 {
            return Certificate::proven(Method::Reduction)
                .with_note("semisimple with one-dimensional centroid, hence simple");
        }
    }
    let cands = candidate_ideals(alg, seed);
    for i in &cands {
        for j in &cands {
            if alg.product_space(i.space(), j.space()).is_zero() {
                return Certificate::refuted(
                    Method::Reduction,
                    Witness::IdealPair(i.space().clone(), j.space().clone()),
                )
                .with_note("annihilating pair found by seeded search");
            }
        }
        let ran = alg.ran(i.space());
        if !ran.is_zero() {
            if let Ok(r) = Ideal::two_sided(alg, ran) {
                if alg.product_space(i.space(), r.space()).is_zero() {
                    return Certificate::refuted(
                        Method::Reduction,
                        Witness::IdealPair(i.space().clone(), r.into_space()),
                    )
                    .with_note("nonzero right annihilator");
                }
            }
        }
    }
    Certificate::unrefuted(seed)
}

/// `R_{b_k}` and `L_{b_k}` for every basis vector.
pub fn multiplication_generators(alg: &LeibnizAlgebra) -> Vec<crate::linalg::Matrix> {
    let mut ops = Vec::new();
    for k in 0..alg.dim() {
        ops.push(alg.right_operator(&alg.unit(k)));
        ops.push(alg.left_operator(&alg.unit(k)));
    }
    ops
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leibniz::catalog;
    use crate::Field;

    const S: u64 = DEFAULT_SEED;

    #[test]
    fn sturdiness() {
        let s = catalog::sl2(Field::Rational);
        assert!(is_sturdy(&s, &Ideal::whole(&s)).is_certified_true());
        let l2 = catalog::l2(Field::Rational);
        let i = Ideal::two_sided(&l2, l2.span(vec![l2.unit(1)])).unwrap();
        assert!(is_sturdy(&l2, &i).is_certified_false());
        assert!(is_sturdy(&l2, &Ideal::zero(&l2)).is_certified_false());
    }

    #[test]
    fn whole_algebra_is_essential() {
        for a in catalog::standard() {
            assert!(is_essential(&a, &Ideal::whole(&a), &Context::new(S)).verdict);
        }
    }

    #[test]
    fn block_of_sl2_sum_is_not_essential() {
        let a = catalog::sl2_sl2(Field::Rational);
        let block = a.span((0..3).map(|i| a.unit(i)).collect());
        let i = Ideal::two_sided(&a, block).unwrap();
        let c = is_essential(&a, &i, &Context::new(S));
        assert!(c.is_certified_false());
        let Some(Witness::Ideal(j)) = c.witness else { panic!("expected ideal witness") };
        assert_eq!(j, a.span((3..6).map(|i| a.unit(i)).collect()));
    }

    #[test]
    fn l2_line_is_essential_by_enumeration() {
        let a = catalog::l2(Field::Prime(3));
        let lat = enumerate_ideals(&a).unwrap();
        let i = Ideal::two_sided(&a, a.span(vec![a.unit(1)])).unwrap();
        let c = is_essential(&a, &i, &Context::new(S).with_lattice(&lat));
        assert!(c.is_certified_true());
        assert_eq!(c.method, Method::Enumeration);
    }

    #[test]
    fn semiprime_examples() {
        let c = is_semiprime(&catalog::sl2(Field::Prime(5)), Strategy::Auto, S).unwrap();
        assert!(c.is_certified_true());
        assert_eq!(c.method, Method::Enumeration);
        let l2 = catalog::l2(Field::Rational);
        let c = is_semiprime(&l2, Strategy::Auto, S).unwrap();
        assert!(c.is_certified_false());
        assert_eq!(c.witness, Some(Witness::Ideal(l2.span(vec![l2.unit(1)]))));
        let ab = catalog::abelian(Field::Rational, 3);
        assert!(is_semiprime(&ab, Strategy::Auto, S).unwrap().is_certified_false());
        assert!(is_semiprime(&catalog::sl2(Field::Rational), Strategy::Auto, S).unwrap().is_certified_true());
        assert!(is_semiprime(&catalog::heisenberg(Field::Rational), Strategy::Auto, S).unwrap().is_certified_false());
    }

    #[test]
    fn oracle_over_rationals_is_unavailable() {
        let a = catalog::sl2(Field::Rational);
        assert!(matches!(is_semiprime(&a, Strategy::Oracle, S), Err(Error::OracleUnavailable(_))));
    }

    #[test]
    fn prime_examples() {
        assert!(is_prime(&catalog::sl2(Field::Prime(5)), Strategy::Auto, S).unwrap().is_certified_true());
        let ss = catalog::sl2_sl2(Field::Rational);
        let c = is_prime(&ss, Strategy::Auto, S).unwrap();
        assert!(c.is_certified_false());
        let Some(Witness::IdealPair(a, b)) = c.witness else { panic!("expected pair") };
        assert!(ss.product_space(&a, &b).is_zero());
        assert!(is_prime(&catalog::abelian(Field::Rational, 1), Strategy::Auto, S).unwrap().is_certified_false());
        assert!(is_prime(&catalog::sl2(Field::Rational), Strategy::Auto, S).unwrap().is_certified_true());
    }
}
