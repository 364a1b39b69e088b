use crate::error::{Error, Result};
use crate::extension::base::Extension;
use crate::extension::filter::IdealFilter;
use crate::ideals::{is_semiprime, Certificate, Method, Strategy, Witness, DEFAULT_SEED};
use crate::linalg::{preimage, vector, Subspace};
use crate::scalar::Scalar;

/// Knobs shared by the quotient predicates.
#[derive(Clone, Debug)]
pub struct QuotientOptions {
    pub seed: u64,
    /// Semiprimeness of `L`; computed when absent.
    pub semiprime: Option<Certificate>,
    /// Skip the single-ideal reduction and check every point (or the test set).
    pub exhaustive: bool,
}

impl Default for QuotientOptions {
    fn default() -> Self {
        QuotientOptions {
            seed: DEFAULT_SEED,
            semiprime: None,
            exhaustive: false,
        }
    }
}

impl QuotientOptions {
    pub fn with_seed(seed: u64) -> Self {
        QuotientOptions {
            seed,
            ..Self::default()
        }
    }

    pub fn exhaustive(mut self) -> Self {
        self.exhaustive = true;
        self
    }

    pub fn assume_semiprime(mut self, cert: Certificate) -> Self {
        self.semiprime = Some(cert);
        self
    }
}

fn reject_degenerate(e: &Extension) -> Result<()> {
    if e.small().is_zero() {
        return Err(Error::Degenerate("the subalgebra L is zero".into()));
    }
    Ok(())
}

fn small_semiprime(e: &Extension, opts: &QuotientOptions) -> Certificate {
    opts.semiprime.clone().unwrap_or_else(|| {
        is_semiprime(e.small_algebra(), Strategy::Auto, opts.seed)
            .or_else(|_| is_semiprime(e.small_algebra(), Strategy::NoOracle, opts.seed))
            .expect("the reduction path does not fail")
    })
}

/// A nonzero `p ∈ Ann_Q((L : q))`, i.e. a `p` that no element of `(L : q)`
/// separates; `None` when the quotient condition holds at `q`.
pub fn quotient_failure_at(e: &Extension, q: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    let lq = e.quotient_ideal(q)?;
    let ann = e.ann_in_big(lq.space());
    Ok((!ann.is_zero()).then(|| ann.basis_vector(0).to_vec()))
}

/// Whether `(L : q)` witnesses absorption of `q`: `Ann_L((L:q)) = 0` and
/// `q ∉ Ann_Q((L:q))`.
pub fn absorbed_at(e: &Extension, q: &[Scalar]) -> Result<bool> {
    let lq = e.quotient_ideal(q)?;
    if !e.small_algebra().ann(lq.space()).is_zero() {
        return Ok(false);
    }
    Ok(!e.ann_in_big(lq.space()).contains(q))
}

/// Whether some `x ∈ L` has `0 ≠ [q, x] ∈ L`, or some `y ∈ L` has `0 ≠ [y, q] ∈ L`.
pub fn weakly_separated_at(e: &Extension, q: &[Scalar]) -> bool {
    let big = e.big();
    let emb = e.embedding();
    for op in [big.left_operator(q).mul(emb), big.right_operator(q).mul(emb)] {
        let good = preimage(&op, e.small());
        if good.basis_vectors().iter().any(|c| !vector::is_zero(&op.apply(c))) {
            return true;
        }
    }
    false
}

/// Points to check and the method a completed check earns.
fn scan(e: &Extension, seed: u64) -> (Vec<Vec<Scalar>>, Method, bool) {
    let (pts, complete) = e.points(seed);
    let method = if complete { Method::Enumeration } else { Method::Reduction };
    (pts, method, complete)
}

fn separating_pair(e: &Extension, seed: u64) -> Result<Option<Witness>> {
    let ann_l = e.big().ann(e.small());
    if !ann_l.is_zero() {
        return Ok(Some(Witness::VectorPair(
            ann_l.basis_vector(0).to_vec(),
            e.big().zero_vector(),
        )));
    }
    for q in e.test_set(seed) {
        if let Some(p) = quotient_failure_at(e, &q)? {
            return Ok(Some(Witness::VectorPair(p, q)));
        }
    }
    Ok(None)
}

/// Whether `Q` is an algebra of quotients of `L`: for all `p ≠ 0` and `q`
/// some element of `(L : q)` brackets nontrivially with `p`.
pub fn is_quotient_algebra(e: &Extension, opts: &QuotientOptions) -> Result<Certificate> {
    reject_degenerate(e)?;
    if !opts.exhaustive {
        let istar = e.common_quotient_ideal()?;
        let ann = e.ann_in_big(istar.space());
        if ann.is_zero() {
            return Ok(Certificate::proven(Method::Reduction).with_note("Ann_Q(I*) = 0"));
        }
        if small_semiprime(e, opts).is_certified_true() {
            let witness = separating_pair(e, opts.seed)?
                .unwrap_or_else(|| Witness::Vector(ann.basis_vector(0).to_vec()));
            return Ok(Certificate::refuted(Method::Reduction, witness)
                .with_note("L semiprime and Ann_Q(I*) is nonzero"));
        }
    }
    let ann_l = e.big().ann(e.small());
    if !ann_l.is_zero() {
        return Ok(Certificate::refuted(
            Method::Reduction,
            Witness::VectorPair(ann_l.basis_vector(0).to_vec(), e.big().zero_vector()),
        )
        .with_note("Ann_Q(L) is nonzero"));
    }
    let (pts, method, complete) = scan(e, opts.seed);
    for q in pts {
        if let Some(p) = quotient_failure_at(e, &q)? {
            return Ok(Certificate::refuted(method, Witness::VectorPair(p, q)));
        }
    }
    Ok(if complete {
        Certificate::proven(Method::Enumeration)
    } else {
        Certificate::unrefuted(opts.seed)
    })
}

/// Whether every `q ≠ 0` is absorbed by some ideal `I` of `L` with
/// `Ann_L(I) = 0`, `[I, q], [q, I] ⊆ L` and one of them nonzero.
pub fn is_ideally_absorbed(e: &Extension, opts: &QuotientOptions) -> Result<Certificate> {
    reject_degenerate(e)?;
    if !opts.exhaustive {
        let istar = e.common_quotient_ideal()?;
        let ann_l = e.small_algebra().ann(istar.space());
        let ann_q = e.ann_in_big(istar.space());
        if ann_l.is_zero() && ann_q.is_zero() {
            return Ok(Certificate::proven(Method::Reduction).with_note("I* is sturdy with Ann_Q(I*) = 0"));
        }
        if small_semiprime(e, opts).is_certified_true() {
            let mut witness = None;
            for q in e.test_set(opts.seed) {
                if !absorbed_at(e, &q)? {
                    witness = Some(Witness::Vector(q));
                    break;
                }
            }
            let witness = witness.unwrap_or_else(|| {
                if ann_q.is_zero() {
                    Witness::Vector(e.embed(ann_l.basis_vector(0)))
                } else {
                    Witness::Vector(ann_q.basis_vector(0).to_vec())
                }
            });
            return Ok(Certificate::refuted(Method::Reduction, witness)
                .with_note("L semiprime and I* fails to absorb"));
        }
    }
    let (pts, method, complete) = scan(e, opts.seed);
    for q in pts {
        if !absorbed_at(e, &q)? {
            return Ok(Certificate::refuted(method, Witness::Vector(q)));
        }
    }
    Ok(if complete {
        Certificate::proven(Method::Enumeration)
    } else {
        Certificate::unrefuted(opts.seed)
    })
}

/// `X* = {x ∈ L : [Q, x] ⊆ L}` and `Y* = {y ∈ L : [y, Q] ⊆ L}` in `L`-coordinates.
pub fn absorbing_sides(e: &Extension) -> (Subspace, Subspace) {
    let big = e.big();
    let emb = e.embedding();
    let p = e.small().membership_matrix();
    let f = big.field();
    let m = e.small().dim();
    if p.rows() == 0 {
        return (Subspace::full(f, m), Subspace::full(f, m));
    }
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for i in 0..big.dim() {
        let b = big.unit(i);
        xs.push(p.mul(&big.left_operator(&b).mul(emb)));
        ys.push(p.mul(&big.right_operator(&b).mul(emb)));
    }
    (
        crate::linalg::joint_kernel(f, m, &xs),
        crate::linalg::joint_kernel(f, m, &ys),
    )
}

/// Whether every `q ≠ 0` has `x ∈ L` with `0 ≠ [q, x] ∈ L` or `y ∈ L`
/// with `0 ≠ [y, q] ∈ L`.
pub fn is_weak_quotient(e: &Extension, opts: &QuotientOptions) -> Result<Certificate> {
    reject_degenerate(e)?;
    let (xs, ys) = absorbing_sides(e);
    let kernel = e.lan_in_big(&xs).intersect(&e.ran_in_big(&ys));
    if kernel.is_zero() {
        return Ok(Certificate::proven(Method::Reduction).with_note("joint kernel on X*, Y* is zero"));
    }
    let ann_l = e.big().ann(e.small());
    if !ann_l.is_zero() {
        return Ok(Certificate::refuted(Method::Reduction, Witness::Vector(ann_l.basis_vector(0).to_vec()))
            .with_note("Ann_Q(L) is nonzero"));
    }
    if !opts.exhaustive && is_quotient_algebra(e, opts)?.is_certified_true() {
        return Ok(Certificate::proven(Method::Reduction).with_note("algebra of quotients"));
    }
    let (pts, method, complete) = scan(e, opts.seed);
    for q in pts {
        if !weakly_separated_at(e, &q) {
            return Ok(Certificate::refuted(method, Witness::Vector(q)));
        }
    }
    Ok(if complete {
        Certificate::proven(Method::Enumeration)
    } else {
        Certificate::unrefuted(opts.seed)
    })
}

/// The derived chain of `I*`, used when no filter is supplied.
pub fn default_filter(e: &Extension) -> Result<IdealFilter> {
    let istar = e.common_quotient_ideal()?;
    IdealFilter::derived_chain(e.small_algebra(), &istar)
}

/// Whether every `q ≠ 0` has a member `I_q` of the filter with
/// `[q, I_q], [I_q, q] ⊆ L` and one of them nonzero.
pub fn is_martindale_quotient(e: &Extension, filter: &IdealFilter, opts: &QuotientOptions) -> Result<Certificate> {
    reject_degenerate(e)?;
    let small = e.small_algebra();
    if !filter.is_power() {
        return Err(Error::InvalidFilter("the filter is not a power filter".into()));
    }
    for (k, m) in filter.members().iter().enumerate() {
        if m.space().ambient() != small.dim() || !m.verify(small) {
            return Err(Error::InvalidFilter(format!("member {k} is not an ideal of L")));
        }
        if !small.ann(m.space()).is_zero() {
            return Err(Error::InvalidFilter(format!("member {k} is not sturdy")));
        }
    }
    if let Some(least) = filter.least_member() {
        let absorbs_all = least.space().is_subspace_of(&e.absorbing_subspace(&e.big().full()));
        if absorbs_all && e.ann_in_big(least.space()).is_zero() {
            return Ok(Certificate::proven(Method::Reduction).with_note("least member absorbs Q with Ann_Q = 0"));
        }
    }
    let (pts, method, complete) = scan(e, opts.seed);
    for q in pts {
        let absorb = e.absorbing_subspace(&e.big().span(vec![q.clone()]));
        let ok = filter
            .members()
            .iter()
            .any(|m| m.space().is_subspace_of(&absorb) && !e.ann_in_big(m.space()).contains(&q));
        if !ok {
            return Ok(Certificate::refuted(method, Witness::Vector(q)));
        }
    }
    Ok(if complete {
        Certificate::proven(Method::Enumeration)
    } else {
        Certificate::unrefuted(opts.seed)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leibniz::{catalog, Ideal};
    use crate::Field;

    fn opts() -> QuotientOptions {
        QuotientOptions::default()
    }

    fn l2_line() -> Extension {
        let q = catalog::l2(Field::Rational);
        let l = q.span(vec![q.unit(1)]);
        Extension::new(q, l).unwrap()
    }

    fn sl2_block() -> Extension {
        let q = catalog::sl2_sl2(Field::Rational);
        let l = q.span((0..3).map(|i| q.unit(i)).collect());
        Extension::new(q, l).unwrap()
    }

    #[test]
    fn algebra_is_quotient_of_itself() {
        let e = Extension::trivial(catalog::sl2(Field::Rational));
        assert!(is_quotient_algebra(&e, &opts()).unwrap().is_certified_true());
        assert!(is_ideally_absorbed(&e, &opts()).unwrap().is_certified_true());
        assert!(is_weak_quotient(&e, &opts()).unwrap().is_certified_true());
    }

    #[test]
    fn l2_line_is_not_a_quotient() {
        let e = l2_line();
        assert!(is_quotient_algebra(&e, &opts()).unwrap().is_certified_false());
        assert!(is_ideally_absorbed(&e, &opts()).unwrap().is_certified_false());
        let w = is_weak_quotient(&e, &opts()).unwrap();
        assert!(w.is_certified_false());
    }

    #[test]
    fn block_inclusion_is_not_absorbed() {
        let e = sl2_block();
        let c = is_ideally_absorbed(&e, &opts()).unwrap();
        assert!(c.is_certified_false());
        assert!(is_quotient_algebra(&e, &opts()).unwrap().is_certified_false());
    }

    #[test]
    fn abelian_self_extension_is_not_absorbed() {
        let e = Extension::trivial(catalog::abelian(Field::Rational, 2));
        assert!(is_ideally_absorbed(&e, &opts()).unwrap().is_certified_false());
    }

    #[test]
    fn zero_subalgebra_is_degenerate() {
        let q = catalog::sl2(Field::Rational);
        let zero = q.zero_subspace();
        let e = Extension::new(q, zero).unwrap();
        assert!(matches!(is_quotient_algebra(&e, &opts()), Err(Error::Degenerate(_))));
    }

    #[test]
    fn exhaustive_paths_agree_over_gf5() {
        let e = Extension::trivial(catalog::sl2(Field::Prime(5)));
        let ex = opts().exhaustive();
        assert!(is_quotient_algebra(&e, &ex).unwrap().is_certified_true());
        assert!(is_ideally_absorbed(&e, &ex).unwrap().is_certified_true());
        assert!(is_weak_quotient(&e, &ex).unwrap().is_certified_true());
    }

    #[test]
    fn martindale_with_whole_filter() {
        let e = Extension::trivial(catalog::sl2(Field::Rational));
        let f = IdealFilter::new_sturdy_power(e.small_algebra(), vec![Ideal::whole(e.small_algebra())]).unwrap();
        assert!(is_martindale_quotient(&e, &f, &opts()).unwrap().is_certified_true());
        let d = default_filter(&e).unwrap();
        assert!(is_martindale_quotient(&e, &d, &opts()).unwrap().is_certified_true());
    }
}
