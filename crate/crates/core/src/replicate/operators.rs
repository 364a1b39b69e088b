use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::extension::{is_quotient_algebra, is_weak_quotient, Extension, QuotientOptions};
use crate::ideals::predicates::candidate_ideals;
use crate::ideals::{enumerate_ideals, is_semiprime, Strategy};
use crate::leibniz::{catalog, Ideal, LeibnizAlgebra};
use crate::linalg::{Matrix, Subspace};
use crate::operators::algebra::{product_space, to_matrix};
use crate::operators::{
    absorbing_left_ideal, assoc_annihilator, assoc_ideal_generated, check_rewrite_identity, is_left_quotient_algebra,
    stabilizer_subalgebra, tilde_ideal, AssocSide, OperatorAlgebra,
};
use crate::replicate::cases::{catalog_mod, random_extensions, small_tables};
use crate::replicate::quotients::maximal_extensions;
use crate::replicate::{Suite, Tally};

/// Words checked per algebra for the rewriting identity.
pub const REWRITE_WORDS: usize = 64;
/// Longest word checked.
pub const REWRITE_LENGTH: usize = 4;

pub(super) fn suites() -> Vec<Suite> {
    vec![
        Suite {
            name: "rewriting_identity",
            section: 5,
            run: rewriting_identity,
        },
        Suite {
            name: "one_sided_closures_agree",
            section: 5,
            run: one_sided_closures_agree,
        },
        Suite {
            name: "annihilator_transfer",
            section: 5,
            run: annihilator_transfer,
        },
        Suite {
            name: "words_absorb_powers_into_stabilizer",
            section: 5,
            run: words_absorb_powers_into_stabilizer,
        },
        Suite {
            name: "operator_characterization_of_quotients",
            section: 5,
            run: operator_characterization_of_quotients,
        },
        Suite {
            name: "operator_algebra_is_left_quotient",
            section: 5,
            run: operator_algebra_is_left_quotient,
        },
    ]
}

fn label(e: &Extension) -> String {
    format!("{} with dim L = {}", e.big().name(), e.small().dim())
}

/// Extensions with symmetric `Q`: each catalog algebra over itself, the
/// maximal quotients over GF(5), and generated subalgebras.
pub fn symmetric_extensions(seed: u64, generated: usize) -> Vec<Extension> {
    let mut out: Vec<Extension> = catalog::standard().into_iter().map(Extension::trivial).collect();
    out.extend(maximal_extensions());
    out.extend(random_extensions(seed, generated));
    out.retain(|e| e.big().is_symmetric());
    out
}

/// Ideals of `L` in `L`-coordinates: the full lattice when it is small,
/// else seeded candidates.
fn ideals_of(l: &LeibnizAlgebra, seed: u64) -> Vec<Ideal> {
    match enumerate_ideals(l) {
        Ok(lat) if lat.len() <= 64 => lat.nonzero().cloned().collect(),
        _ => candidate_ideals(l, seed),
    }
}

fn rewriting_identity(t: &mut Tally, seed: u64) {
    let mut algebras = catalog::standard();
    algebras.extend(catalog_mod(5));
    for q in algebras.iter().filter(|q| q.is_symmetric()) {
        if let Some(r) = t.ok(check_rewrite_identity(q, REWRITE_WORDS, REWRITE_LENGTH, seed, false), q.name()) {
            t.check(r.words == REWRITE_WORDS && r.failures == 0, || {
                format!("{}: {} of {} words fail", q.name(), r.failures, r.words)
            });
        }
    }
}

fn one_sided_closures_agree(t: &mut Tally, seed: u64) {
    for e in symmetric_extensions(seed, 16) {
        let Some(aql) = t.ok(OperatorAlgebra::relative(e.big(), e.small(), false), &label(&e)) else {
            continue;
        };
        for i in ideals_of(e.small_algebra(), seed) {
            let iq = e.embed_subspace(i.space());
            let Some(aqi) = t.ok(OperatorAlgebra::relative(e.big(), &iq, false), &label(&e)) else {
                continue;
            };
            let r = assoc_ideal_generated(&aql, &aqi);
            t.check(r.is_ok(), || format!("{}: one-sided closures differ", label(&e)));
            let Ok(tilde) = r else {
                continue;
            };
            for side in [AssocSide::Right, AssocSide::Left] {
                let (Some(a), Some(b)) = (
                    t.ok(assoc_annihilator(&aql, &tilde.space, side), &label(&e)),
                    t.ok(assoc_annihilator(&aql, aqi.space(), side), &label(&e)),
                ) else {
                    continue;
                };
                t.check(a == b, || format!("{}: {side:?} annihilators of Ĩ and A_Q(I) differ", label(&e)));
            }
        }
    }
}

fn annihilator_transfer(t: &mut Tally, seed: u64) {
    let mut algebras: Vec<LeibnizAlgebra> = catalog::standard();
    algebras.extend(small_tables().iter().filter(|a| a.is_symmetric()).cloned());
    for l in algebras.iter().filter(|l| l.ran(&l.full()).is_zero()) {
        let Some(al) = t.ok(OperatorAlgebra::of(l, false), l.name()) else {
            continue;
        };
        for i in ideals_of(l, seed) {
            let Some(ali) = t.ok(OperatorAlgebra::relative(l, i.space(), false), l.name()) else {
                continue;
            };
            if let Some(ran) = t.ok(assoc_annihilator(&al, ali.space(), AssocSide::Right), l.name()) {
                t.check(l.ann(i.space()).is_zero() == ran.is_zero(), || {
                    format!("{}: Ann_L(I) = 0 and ran(A_L(I)) = 0 disagree", l.name())
                });
            }
        }
    }
    for e in symmetric_extensions(seed, 24) {
        let opts = QuotientOptions::with_seed(seed).exhaustive();
        let Some(w) = t.ok(is_weak_quotient(&e, &opts), &label(&e)) else {
            continue;
        };
        if !w.is_certified_true() {
            continue;
        }
        let Some(aq) = t.ok(OperatorAlgebra::of(e.big(), false), &label(&e)) else {
            continue;
        };
        for i in ideals_of(e.small_algebra(), seed) {
            if !e.small_algebra().ann(i.space()).is_zero() {
                continue;
            }
            let iq = e.embed_subspace(i.space());
            let Some(aqi) = t.ok(OperatorAlgebra::relative(e.big(), &iq, false), &label(&e)) else {
                continue;
            };
            if let Some(ran) = t.ok(assoc_annihilator(&aq, aqi.space(), AssocSide::Right), &label(&e)) {
                t.check(ran.is_zero(), || format!("{}: ran_A(Q)(A_Q(I)) ≠ 0 for a sturdy I", label(&e)));
            }
        }
    }
}

/// The `k`-th power of an operator space inside the ambient matrices.
fn power(n: usize, s: &Subspace, k: usize) -> Subspace {
    (1..k).fold(s.clone(), |acc, _| product_space(n, &acc, s))
}

/// A seeded word `ξ_1⋯ξ_r` in `R_q`, `L_q` for basis vectors `q` of `Q`.
fn random_word(q: &LeibnizAlgebra, len: usize, rng: &mut ChaCha8Rng) -> Matrix {
    (0..len).fold(Matrix::identity(q.field(), q.dim()), |acc, _| {
        let b = q.unit(rng.gen_range(0..q.dim()));
        let xi = if rng.gen_bool(0.5) { q.right_operator(&b) } else { q.left_operator(&b) };
        acc.mul(&xi)
    })
}

fn products_inside(n: usize, mu: &Matrix, s: &Subspace, target: &OperatorAlgebra) -> bool {
    let f = s.field();
    s.basis_vectors().iter().all(|v| {
        let x = to_matrix(f, n, v);
        target.contains(&mu.mul(&x)) && target.contains(&x.mul(mu))
    })
}

/// Certified quotient extensions with their `A_0` and `I*`.
fn quotient_cases(t: &mut Tally, seed: u64, generated: usize) -> Vec<(Extension, OperatorAlgebra, Ideal)> {
    let opts = QuotientOptions::with_seed(seed).exhaustive();
    let mut out = Vec::new();
    for e in symmetric_extensions(seed, generated) {
        let Some(c) = t.ok(is_quotient_algebra(&e, &opts), &label(&e)) else {
            continue;
        };
        if !c.is_certified_true() {
            continue;
        }
        let Some(aq) = t.ok(OperatorAlgebra::of(e.big(), false), &label(&e)) else {
            continue;
        };
        let Some(a0) = t.ok(stabilizer_subalgebra(&aq, e.small()), &label(&e)) else {
            continue;
        };
        let Some(istar) = t.ok(e.common_quotient_ideal(), &label(&e)) else {
            continue;
        };
        out.push((e, a0, istar));
    }
    out
}

fn words_absorb_powers_into_stabilizer(t: &mut Tally, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x56);
    for (e, a0, istar) in quotient_cases(t, seed, 24) {
        let n = e.big().dim();
        let iq = e.embed_subspace(istar.space());
        let Some(tilde) = t.ok(tilde_ideal(e.big(), e.small(), &iq, false), &label(&e)) else {
            continue;
        };
        for len in 1..=3 {
            let mu = random_word(e.big(), len, &mut rng);
            let tilde_pow = power(n, &tilde.space, len);
            t.check(products_inside(n, &mu, &tilde_pow, &a0), || {
                format!("{}: a word of length {len} moves (Ĩ)^{len} out of A_0", label(&e))
            });
            let ipow = e.small_algebra().ideal_power(&istar, len);
            let ipow_q = e.embed_subspace(ipow.space());
            if let Some(tp) = t.ok(tilde_ideal(e.big(), e.small(), &ipow_q, false), &label(&e)) {
                t.check(tp.space.is_subspace_of(&tilde_pow), || {
                    format!("{}: the tilde of I^{len} is not inside (Ĩ)^{len}", label(&e))
                });
                t.check(products_inside(n, &mu, &tp.space, &a0), || {
                    format!("{}: a word of length {len} moves the tilde of I^{len} out of A_0", label(&e))
                });
            }
        }
    }
}

/// `I_0 = span{α(x) : α ∈ S, x ∈ L}`.
fn evaluate(n: usize, s: &Subspace, l: &Subspace) -> Subspace {
    let f = s.field();
    let mut out = Vec::new();
    for v in s.basis_vectors() {
        let a = to_matrix(f, n, &v);
        out.extend(l.basis_vectors().iter().map(|x| a.apply(x)));
    }
    Subspace::from_vectors(f, l.ambient(), out)
}

fn operator_characterization_of_quotients(t: &mut Tally, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x59);
    for (e, a0, istar) in quotient_cases(t, seed, 24) {
        let small = e.small_algebra();
        let semiprime = is_semiprime(small, Strategy::Auto, seed).map(|c| c.is_certified_true());
        if !semiprime.unwrap_or(false) {
            continue;
        }
        let q = e.big();
        let n = q.dim();
        for _ in 0..4 {
            let lens = [rng.gen_range(1..=2), rng.gen_range(1..=2)];
            let mu = random_word(q, lens[0], &mut rng).add(&random_word(q, lens[1], &mut rng));
            if mu.is_zero() {
                continue;
            }
            let s = lens[0] + lens[1];
            let i = small.ideal_power(&istar, s);
            t.check(small.ann(i.space()).is_zero(), || format!("{}: the chosen I is not sturdy", label(&e)));
            let iq = e.embed_subspace(i.space());
            let Some(tilde) = t.ok(tilde_ideal(q, e.small(), &iq, false), &label(&e)) else {
                continue;
            };
            t.check(products_inside(n, &mu, &tilde.space, &a0), || {
                format!("{}: μĨ or Ĩμ leaves A_0", label(&e))
            });
            let tilde_mu = tilde
                .space
                .basis_vectors()
                .iter()
                .any(|v| !to_matrix(q.field(), n, v).mul(&mu).is_zero());
            t.check(tilde_mu, || format!("{}: Ĩμ = 0 for a nonzero μ", label(&e)));
            let i0 = evaluate(n, &tilde.space, e.small());
            let Some(i0_l) = e.restrict_subspace(&i0) else {
                t.fail(format!("{}: Ĩ(L) is not inside L", label(&e)));
                continue;
            };
            let i0_ideal = Ideal::two_sided(small, i0_l.clone());
            t.check(i0_ideal.is_ok() && small.ann(&i0_l).is_zero(), || {
                format!("{}: I_0 is not a sturdy ideal", label(&e))
            });
            for p in e.test_set(seed) {
                let rq = i0.image(&q.right_operator(&p));
                let lq = i0.image(&q.left_operator(&p));
                t.check(!(rq.is_zero() && lq.is_zero()), || format!("{}: R_qĨ(L) = L_qĨ(L) = 0", label(&e)));
                let absorbs = i0_l.is_subspace_of(&e.absorbing_subspace(&q.span(vec![p.clone()])));
                t.check(absorbs, || format!("{}: I_0 does not absorb q", label(&e)));
            }
        }
    }
}

fn operator_algebra_is_left_quotient(t: &mut Tally, seed: u64) {
    for (e, a0, istar) in quotient_cases(t, seed, 24) {
        let semiprime = is_semiprime(e.small_algebra(), Strategy::Auto, seed).map(|c| c.is_certified_true());
        if !semiprime.unwrap_or(false) {
            continue;
        }
        let Some(aq) = t.ok(OperatorAlgebra::of(e.big(), false), &label(&e)) else {
            continue;
        };
        if let Some(c) = t.ok(is_left_quotient_algebra(&aq, &a0, seed), &label(&e)) {
            t.check(c.verdict, || format!("{}: A(Q) is not a left quotient algebra of A_0", label(&e)));
            if !c.certified {
                t.open();
            }
        }
        let iq = e.embed_subspace(istar.space());
        let Some(tilde) = t.ok(tilde_ideal(e.big(), e.small(), &iq, false), &label(&e)) else {
            continue;
        };
        if let Some(j) = t.ok(absorbing_left_ideal(&a0, &tilde), &label(&e)) {
            if let Some(ran) = t.ok(assoc_annihilator(&a0, &j.space, AssocSide::Right), &label(&e)) {
                t.check(ran.is_zero(), || format!("{}: A_0Ĩ + Ĩ has a right annihilator", label(&e)));
            }
        }
    }
}
