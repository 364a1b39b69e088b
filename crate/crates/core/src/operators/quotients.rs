use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::extension::{Extension, POINT_CAP};
use crate::ideals::lattice::{check_enumerable, for_each_subspace, points_under_cap};
use crate::ideals::predicates::RANDOM_SAMPLES;
use crate::ideals::{is_semiprime, Certificate, Method, Strategy, Witness};
use crate::leibniz::LeibnizAlgebra;
use crate::linalg::{vector, Matrix, Subspace};
use crate::operators::algebra::{product_space, to_matrix, to_vector, OperatorAlgebra};
use crate::operators::ideals::{assoc_annihilator, AssocIdeal, AssocSide};
use crate::scalar::Scalar;

/// Elements `Σ c_i b_i` of the span of `basis` with `P·map(Σ c_i b_i) = 0`
/// for every listed linear map `map_k`, given as images of each basis matrix.
fn solve_in_span(
    a: &OperatorAlgebra,
    images: impl Fn(&Matrix) -> Vec<Vec<Scalar>>,
    membership: &Matrix,
) -> Result<Subspace> {
    let f = a.field();
    let n = a.ambient_dim();
    let basis = a.basis();
    let k = basis.len();
    let per_basis: Vec<Vec<Vec<Scalar>>> = basis
        .iter()
        .map(|b| images(b).iter().map(|v| membership.apply(v)).collect())
        .collect();
    let mut rows = Vec::new();
    if k > 0 {
        for t in 0..per_basis[0].len() {
            for r in 0..membership.rows() {
                rows.push((0..k).map(|i| per_basis[i][t][r].clone()).collect());
            }
        }
    }
    let coeffs = Matrix::from_rows(f, k, rows)?.kernel();
    Ok(Subspace::from_vectors(
        f,
        n * n,
        coeffs.basis_vectors().iter().map(|c| a.space().combination(c)),
    ))
}

fn require_inside(s: &OperatorAlgebra, a: &OperatorAlgebra) -> Result<()> {
    if s.ambient_dim() != a.ambient_dim() || !s.contains_space(a.space()) {
        return Err(Error::Precondition("A must be a subalgebra of S".into()));
    }
    Ok(())
}

fn operator_witness(a: &OperatorAlgebra, v: &[Scalar]) -> Witness {
    Witness::Operator(to_matrix(a.field(), a.ambient_dim(), v))
}

/// `{x ∈ A : x·q ∈ A}`, a left ideal of `A`.
fn left_conductor(a: &OperatorAlgebra, qs: &[Matrix]) -> Result<Subspace> {
    let membership = a.space().membership_matrix();
    if membership.rows() == 0 {
        return Ok(a.space().clone());
    }
    solve_in_span(a, |b| qs.iter().map(|q| to_vector(&b.mul(q))).collect(), &membership)
}

/// Whether `S` is a left quotient algebra of `A`: every `q ≠ 0` in `S` has a
/// left ideal `J` of `A` with `ran_A(J) = 0` and `0 ≠ Jq ⊆ A`.
///
/// The largest left ideal with `J·S ⊆ A` settles all of `S` at once when its
/// right annihilator in `S` vanishes. Otherwise each line of `S` is checked
/// with its own largest admissible left ideal `{x ∈ A : xq ∈ A}`.
pub fn is_left_quotient_algebra(s: &OperatorAlgebra, a: &OperatorAlgebra, seed: u64) -> Result<Certificate> {
    require_inside(s, a)?;
    let n = s.ambient_dim();
    let f = s.field();
    let total_zero = assoc_annihilator(s, a.space(), AssocSide::Right)?;
    if !total_zero.is_zero() {
        return Ok(
            Certificate::refuted(Method::Reduction, operator_witness(s, total_zero.basis_vector(0)))
                .with_note("a nonzero element of S is killed by all of A"),
        );
    }
    let s_basis = s.basis();
    let common = left_conductor(a, &s_basis)?;
    let common_ideal = AssocIdeal {
        space: common.clone(),
        side: AssocSide::Left,
    };
    if !common_ideal.verify(a) {
        return Err(Error::InternalFault("conductor of S into A is not a left ideal".into()));
    }
    if assoc_annihilator(s, &common, AssocSide::Right)?.is_zero() {
        return Ok(Certificate::proven(Method::Reduction).with_note("J·S ⊆ A with zero right annihilator in S"));
    }
    let (coords, complete) = match points_under_cap(f, s.dim(), POINT_CAP) {
        Some(p) => (p, true),
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut c: Vec<Vec<Scalar>> = (0..s.dim()).map(|i| vector::unit(f, s.dim(), i)).collect();
            c.extend((0..RANDOM_SAMPLES).map(|_| vector::random(f, s.dim(), &mut rng)));
            c.retain(|v| !vector::is_zero(v));
            (c, false)
        }
    };
    let method = if complete { Method::Enumeration } else { Method::Reduction };
    for c in coords {
        let qv = s.space().combination(&c);
        let q = to_matrix(f, n, &qv);
        let j = left_conductor(a, std::slice::from_ref(&q))?;
        let jq = product_space(n, &j, &Subspace::from_vectors(f, n * n, vec![qv.clone()]));
        if jq.is_zero() || !assoc_annihilator(a, &j, AssocSide::Right)?.is_zero() {
            return Ok(Certificate::refuted(method, operator_witness(s, &qv)));
        }
    }
    Ok(if complete {
        Certificate::proven(Method::Enumeration)
    } else {
        Certificate::unrefuted(seed)
    })
}

/// Whether `S` is strong right ideally absorbed into `A`.
///
/// Every admissible ideal lies in `K = {x ∈ A : S·x ⊆ A, S·A·x ⊆ A}`, itself
/// a two-sided ideal of `A`, and enlarging the ideal only helps; so the
/// verdict is that of `K`. Supplied candidates are checked for consistency.
pub fn is_strong_right_ideally_absorbed(
    s: &OperatorAlgebra,
    a: &OperatorAlgebra,
    candidates: &[AssocIdeal],
) -> Result<Certificate> {
    require_inside(s, a)?;
    let k = absorbed_ideal(s, a)?;
    let verdict = strong_conditions(s, a, &k)?;
    for c in candidates {
        let ok = c.side == AssocSide::TwoSided && c.verify(a) && {
            let n = a.ambient_dim();
            product_space(n, s.space(), &c.space).is_subspace_of(a.space())
                && strong_conditions(s, a, &c.space)?.is_none()
        };
        if ok && verdict.is_some() {
            return Err(Error::InternalFault("a candidate ideal passes where the largest one fails".into()));
        }
    }
    Ok(match verdict {
        None => Certificate::proven(Method::Reduction).with_witness(Witness::Ideal(k)),
        Some(w) => Certificate::refuted(Method::Reduction, w),
    })
}

/// `K = {x ∈ A : S·x ⊆ A, S·A·x ⊆ A}`.
pub fn absorbed_ideal(s: &OperatorAlgebra, a: &OperatorAlgebra) -> Result<Subspace> {
    let membership = a.space().membership_matrix();
    if membership.rows() == 0 {
        return Ok(a.space().clone());
    }
    let s_basis = s.basis();
    let mut lefts = s_basis.clone();
    for sb in &s_basis {
        for ab in a.basis() {
            lefts.push(sb.mul(&ab));
        }
    }
    solve_in_span(a, |x| lefts.iter().map(|l| to_vector(&l.mul(x))).collect(), &membership)
}

/// `None` when `lan_A(I) = 0` and `{s ∈ S : sI = 0} = 0`, else a witness.
fn strong_conditions(s: &OperatorAlgebra, a: &OperatorAlgebra, i: &Subspace) -> Result<Option<Witness>> {
    let lan_a = assoc_annihilator(a, i, AssocSide::Left)?;
    if !lan_a.is_zero() {
        return Ok(Some(operator_witness(a, lan_a.basis_vector(0))));
    }
    let lan_s = assoc_annihilator(s, i, AssocSide::Left)?;
    if !lan_s.is_zero() {
        return Ok(Some(operator_witness(s, lan_s.basis_vector(0))));
    }
    Ok(None)
}

/// `{μ ∈ A : μ(L) = 0}`.
pub fn vanishing_on(a: &OperatorAlgebra, l: &Subspace) -> Result<Subspace> {
    let n = a.ambient_dim();
    let id = Matrix::identity(a.field(), n);
    let xs = l.basis_vectors();
    solve_in_span(a, |b| xs.iter().map(|x| b.apply(x)).collect(), &id)
}

/// `L^ann = {μ ∈ M(Q) : μ(L) = 0}`.
pub fn l_ann_in_mq(ext: &Extension, allow_nonsymmetric: bool) -> Result<Subspace> {
    let m = OperatorAlgebra::multiplication(ext.big(), allow_nonsymmetric)?;
    vanishing_on(&m, ext.small())
}

/// Whether `L ⊆ Q` is dense (`L^ann = 0`). When `Ann(Q) = 0` the verdict is
/// cross-checked against the criterion that uses `A(Q)` alone.
pub fn is_dense_extension(ext: &Extension, allow_nonsymmetric: bool) -> Result<Certificate> {
    let q = ext.big();
    let m = OperatorAlgebra::multiplication(q, allow_nonsymmetric)?;
    let lann = vanishing_on(&m, ext.small())?;
    if q.ann(&q.full()).is_zero() {
        let a = OperatorAlgebra::of(q, allow_nonsymmetric)?;
        let a_only = vanishing_on(&a, ext.small())?;
        if a_only.is_zero() != lann.is_zero() {
            return Err(Error::InternalFault(
                "density criteria over M(Q) and A(Q) disagree although Ann(Q) = 0".into(),
            ));
        }
    }
    let cert = if lann.is_zero() {
        Certificate::proven(Method::Reduction)
    } else {
        Certificate::refuted(Method::Reduction, operator_witness(&m, lann.basis_vector(0)))
    };
    Ok(if m.is_outside_hypotheses() {
        cert.with_note("algebra is not symmetric; outside the hypotheses")
    } else {
        cert
    })
}

/// `R, R², …` until zero; the last nonzero power, when `R` is nilpotent.
fn square_zero_power(n: usize, r: &Subspace) -> Option<Subspace> {
    let mut power = r.clone();
    for _ in 0..=n * n {
        let next = product_space(n, &power, r);
        if next.is_zero() {
            return Some(power);
        }
        if next.dim() == power.dim() {
            return None;
        }
        power = next;
    }
    None
}

/// Semiprimeness of an associative matrix algebra: no nonzero ideal of square zero.
///
/// The radical of the trace form `tr(ab)` contains every nilpotent ideal, so
/// a nondegenerate form proves semiprimeness; in characteristic zero the
/// radical is itself nilpotent.
pub fn is_assoc_semiprime(a: &OperatorAlgebra, seed: u64) -> Result<Certificate> {
    let f = a.field();
    let n = a.ambient_dim();
    let basis = a.basis();
    let k = basis.len();
    let gram: Vec<Vec<Scalar>> = basis
        .iter()
        .map(|x| basis.iter().map(|y| x.mul(y).trace()).collect())
        .collect();
    let radical_coords = Matrix::from_rows(f, k, gram)?.kernel();
    let radical = Subspace::from_vectors(
        f,
        n * n,
        radical_coords.basis_vectors().iter().map(|c| a.space().combination(c)),
    );
    if radical.is_zero() {
        return Ok(Certificate::proven(Method::Reduction).with_note("trace form is nondegenerate"));
    }
    if let Some(w) = square_zero_power(n, &radical) {
        return Ok(Certificate::refuted(Method::Reduction, Witness::Ideal(w)).with_note("nilpotent trace radical"));
    }
    if f.characteristic() == 0 {
        return Err(Error::InternalFault("trace radical is not nilpotent in characteristic zero".into()));
    }
    if check_enumerable(f, k).is_err() {
        return Ok(Certificate::unrefuted(seed).with_note("trace radical not nilpotent; search capped"));
    }
    let mut found = None;
    for_each_subspace(f, k, |c| {
        if c.is_zero() {
            return true;
        }
        let i = Subspace::from_vectors(f, n * n, c.basis_vectors().iter().map(|v| a.space().combination(v)));
        let ideal = AssocIdeal {
            space: i.clone(),
            side: AssocSide::TwoSided,
        };
        if ideal.verify(a) && product_space(n, &i, &i).is_zero() {
            found = Some(i);
            return false;
        }
        true
    })?;
    Ok(match found {
        Some(i) => Certificate::refuted(Method::Enumeration, Witness::Ideal(i)),
        None => Certificate::proven(Method::Enumeration),
    })
}

/// `Q` semiprime and `M(Q)` semiprime.
pub fn is_multiplicatively_semiprime(q: &LeibnizAlgebra, allow_nonsymmetric: bool, seed: u64) -> Result<Certificate> {
    let leib = is_semiprime(q, Strategy::Auto, seed)?;
    if !leib.verdict {
        return Ok(leib.with_note("the Leibniz algebra is not semiprime"));
    }
    let m = OperatorAlgebra::multiplication(q, allow_nonsymmetric)?;
    let assoc = is_assoc_semiprime(&m, seed)?;
    if !assoc.verdict {
        return Ok(assoc.with_note("M(Q) has a nonzero ideal of square zero"));
    }
    Ok(if leib.certified && assoc.certified {
        Certificate::proven(Method::Reduction)
    } else {
        Certificate::unrefuted(seed)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::DEFAULT_SEED;
    use crate::leibniz::catalog;
    use crate::operators::ideals::stabilizer_subalgebra;
    use crate::Field;

    fn unit(f: crate::Field, n: usize, r: usize, c: usize) -> Matrix {
        let mut m = Matrix::zeros(f, n, n);
        m.set(r, c, f.one());
        m
    }

    #[test]
    fn algebra_is_left_quotient_of_itself() {
        let a = OperatorAlgebra::of(&catalog::sl2(Field::Rational), false).unwrap();
        assert!(is_left_quotient_algebra(&a, &a, DEFAULT_SEED).unwrap().is_certified_true());
    }

    #[test]
    fn strictly_upper_triangular_is_not_a_left_order() {
        let f = Field::Rational;
        let full = OperatorAlgebra::generated_by(f, 3, &[unit(f, 3, 0, 1), unit(f, 3, 1, 0), unit(f, 3, 1, 2), unit(f, 3, 2, 1)]);
        assert_eq!(full.dim(), 9);
        let upper = OperatorAlgebra::generated_by(f, 3, &[unit(f, 3, 0, 1), unit(f, 3, 1, 2)]);
        assert_eq!(upper.dim(), 3);
        assert!(is_left_quotient_algebra(&full, &upper, DEFAULT_SEED).unwrap().is_certified_false());
    }

    #[test]
    fn stabilizer_of_sl2_is_left_order() {
        let q = catalog::sl2(Field::Rational);
        let aq = OperatorAlgebra::of(&q, false).unwrap();
        let a0 = stabilizer_subalgebra(&aq, &q.full()).unwrap();
        assert!(is_left_quotient_algebra(&aq, &a0, DEFAULT_SEED).unwrap().is_certified_true());
    }

    #[test]
    fn density_examples() {
        let sl2 = Extension::trivial(catalog::sl2(Field::Rational));
        assert!(is_dense_extension(&sl2, false).unwrap().is_certified_true());

        let l2 = catalog::l2(Field::Rational);
        let line = l2.span(vec![l2.unit(1)]);
        let e = Extension::new(l2, line).unwrap();
        let lann = l_ann_in_mq(&e, false).unwrap();
        let r_e1 = e.big().right_operator(&e.big().unit(0));
        assert!(lann.contains(&to_vector(&r_e1)));
        assert!(is_dense_extension(&e, false).unwrap().is_certified_false());

        let q = catalog::sl2_sl2(Field::Rational);
        let block = q.span((0..3).map(|i| q.unit(i)).collect());
        let e = Extension::new(q, block).unwrap();
        assert!(is_dense_extension(&e, false).unwrap().is_certified_false());
    }

    #[test]
    fn abelian_density_needs_nonzero_l() {
        let q = catalog::abelian(Field::Rational, 2);
        let e = Extension::new(q.clone(), q.span(vec![q.unit(0)])).unwrap();
        assert!(is_dense_extension(&e, false).unwrap().is_certified_true());
        let e = Extension::new(q.clone(), q.zero_subspace()).unwrap();
        assert!(is_dense_extension(&e, false).unwrap().is_certified_false());
    }

    #[test]
    fn multiplicative_semiprimeness() {
        let seed = DEFAULT_SEED;
        assert!(is_multiplicatively_semiprime(&catalog::sl2(Field::Rational), false, seed)
            .unwrap()
            .is_certified_true());
        assert!(is_multiplicatively_semiprime(&catalog::l2(Field::Rational), false, seed)
            .unwrap()
            .is_certified_false());
        assert!(!is_multiplicatively_semiprime(&catalog::abelian(Field::Rational, 2), false, seed)
            .unwrap()
            .verdict);
        assert!(is_multiplicatively_semiprime(&catalog::sl2(Field::Prime(5)), false, seed)
            .unwrap()
            .is_certified_true());
    }

    #[test]
    fn strong_absorption_examples() {
        let f = Field::Rational;
        let q = catalog::sl2(f);
        let aq = OperatorAlgebra::of(&q, false).unwrap();
        let a0 = stabilizer_subalgebra(&aq, &q.full()).unwrap();
        let whole = AssocIdeal {
            space: a0.space().clone(),
            side: AssocSide::TwoSided,
        };
        assert!(is_strong_right_ideally_absorbed(&aq, &a0, &[whole]).unwrap().is_certified_true());

        let small = OperatorAlgebra::generated_by(f, 2, &[unit(f, 2, 0, 0), unit(f, 2, 0, 1)]);
        assert_eq!(small.dim(), 2);
        let c = is_strong_right_ideally_absorbed(&small, &small, &[]).unwrap();
        assert!(c.is_certified_false());
    }
}
