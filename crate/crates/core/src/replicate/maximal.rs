use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::extension::{is_quotient_algebra, QuotientOptions};
use crate::ideals::predicates::semiprime_from_lattice;
use crate::ideals::{enumerate_ideals, is_semiprime, Strategy};
use crate::leibniz::{catalog, LeibnizAlgebra};
use crate::linalg::{vector, Matrix, Subspace};
use crate::maximal::pder::{restricted_right, PderSpace};
use crate::maximal::{build_qmax, passman_check, MaximalQuotients, PassmanOptions, QmaxOptions};
use crate::replicate::cases::small_tables;
use crate::replicate::quotients::maximal_extensions;
use crate::replicate::{Suite, Tally};
use crate::scalar::Field;

/// Random `(δ, x)` pairs drawn for the commutator identities.
pub const COMMUTATOR_PAIRS: usize = 200;

pub(super) fn suites() -> Vec<Suite> {
    vec![
        Suite {
            name: "maximal_quotient_is_leibniz",
            section: 4,
            run: maximal_quotient_is_leibniz,
        },
        Suite {
            name: "maximal_quotient_is_semiprime_quotient",
            section: 4,
            run: maximal_quotient_is_semiprime_quotient,
        },
        Suite {
            name: "commutators_with_right_multiplications",
            section: 4,
            run: commutators_with_right_multiplications,
        },
        Suite {
            name: "partial_derivations_close_under_bracket",
            section: 4,
            run: partial_derivations_close_under_bracket,
        },
        Suite {
            name: "equivalence_is_decided_on_the_socle",
            section: 4,
            run: equivalence_is_decided_on_the_socle,
        },
        Suite {
            name: "passman_conditions",
            section: 4,
            run: passman_conditions,
        },
    ]
}

/// `sl2` over ℚ and GF(5), and `sl2 ⊕ sl2` over ℚ.
pub fn semiprime_cases() -> Vec<LeibnizAlgebra> {
    vec![
        catalog::sl2(Field::Rational),
        catalog::sl2(Field::Prime(5)),
        catalog::sl2_sl2(Field::Rational),
    ]
}

fn built(t: &mut Tally, seed: u64) -> Vec<MaximalQuotients> {
    let opts = QmaxOptions {
        seed,
        ..QmaxOptions::default()
    };
    semiprime_cases()
        .iter()
        .filter_map(|a| t.ok(build_qmax(a, &opts), a.name()))
        .collect()
}

fn maximal_quotient_is_leibniz(t: &mut Tally, seed: u64) {
    for m in built(t, seed) {
        let name = m.base().name().to_string();
        let q = m.algebra();
        t.check(q.is_right_leibniz(), || format!("{name}: Q_m fails the right identity"));
        t.check(m.phi().rank() == m.base().dim(), || format!("{name}: φ is not injective"));
        let base = m.base();
        for i in 0..base.dim() {
            for j in 0..base.dim() {
                let lhs = m.phi().apply(base.basis_product(i, j));
                let rhs = q.bracket(&m.phi().column(i), &m.phi().column(j));
                t.check(lhs == rhs, || format!("{name}: φ([b_{i}, b_{j}]) ≠ [φ b_{i}, φ b_{j}]"));
            }
        }
        if base.name().starts_with("sl2") && base.dim() == 3 {
            t.check(m.dim() == 3 && m.phi_image().is_full(), || format!("{name}: φ is not onto Q_m"));
        }
    }
}

fn maximal_quotient_is_semiprime_quotient(t: &mut Tally, seed: u64) {
    for m in built(t, seed) {
        let name = m.base().name().to_string();
        match is_semiprime(m.algebra(), Strategy::Auto, seed) {
            Ok(c) if c.is_certified_true() => t.check(true, String::new),
            Ok(c) if c.verdict => t.open(),
            Ok(_) => t.fail(format!("{name}: Q_m is not semiprime")),
            Err(e) => t.fail(format!("{name}: {e}")),
        }
        let Some(ext) = t.ok(m.extension(), &name) else {
            continue;
        };
        let opts = QuotientOptions::with_seed(seed).exhaustive();
        if let Some(c) = t.ok(is_quotient_algebra(&ext, &opts), &name) {
            t.check(c.verdict, || format!("{name}: Q_m is not a quotient of φ(L)"));
        }
    }
}

fn commutators_with_right_multiplications(t: &mut Tally, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ms = built(t, seed);
    let per = COMMUTATOR_PAIRS.div_ceil(ms.len().max(1));
    for m in &ms {
        let name = m.base().name();
        let f = m.base().field();
        let e = m.essential().space();
        for _ in 0..per {
            let delta = m.map_of(&vector::random(f, m.dim(), &mut rng));
            let x = e.combination(&vector::random(f, e.dim(), &mut rng));
            let rx = m.right_map(&x);
            let dx = delta.apply(&e.coords(&x).expect("x lies in E"));
            let Some(left) = t.ok(m.bracket_maps(&delta, &rx), name) else {
                continue;
            };
            let Some(right) = t.ok(m.bracket_maps(&rx, &delta), name) else {
                continue;
            };
            t.check(left == m.right_map(&vector::neg(&dx)), || format!("{name}: [δ, R_x] ≠ R_(−δ(x))"));
            t.check(right == m.right_map(&dx), || format!("{name}: [R_x, δ] ≠ R_δ(x)"));
        }
    }
}

fn partial_derivations_close_under_bracket(t: &mut Tally, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x44);
    for m in built(t, seed) {
        let name = m.base().name();
        let f = m.base().field();
        for _ in 0..16 {
            let a = m.map_of(&vector::random(f, m.dim(), &mut rng));
            let b = m.map_of(&vector::random(f, m.dim(), &mut rng));
            if let Some(c) = t.ok(m.bracket_maps(&a, &b), name) {
                t.check(m.coords_of(&c).is_some(), || format!("{name}: a bracket leaves PDer(E, L)"));
            }
        }
    }
}

/// `δ|_S` as a map on the coordinates of `S ⊆ I`.
fn restrict_map(domain: &Subspace, map: &Matrix, s: &Subspace) -> Matrix {
    let cols: Vec<_> = s
        .basis_vectors()
        .iter()
        .map(|u| map.apply(&domain.coords(u).expect("S lies in the domain")))
        .collect();
    Matrix::from_columns(map.field(), domain.ambient(), &cols)
}

fn equivalence_is_decided_on_the_socle(t: &mut Tally, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x42);
    let mut algebras: Vec<LeibnizAlgebra> = small_tables()
        .iter()
        .filter(|a| {
            enumerate_ideals(a)
                .map(|lat| semiprime_from_lattice(a, &lat).is_certified_true())
                .unwrap_or(false)
        })
        .take(40)
        .cloned()
        .collect();
    algebras.push(catalog::sl2(Field::Prime(5)));
    for alg in &algebras {
        let Some(lat) = t.ok(enumerate_ideals(alg), alg.name()) else {
            continue;
        };
        let Some(m) = t.ok(build_qmax(alg, &QmaxOptions::default()), alg.name()) else {
            continue;
        };
        let e = m.essential().space().clone();
        let essential: Vec<_> = lat.essential().cloned().collect();
        for i in &essential {
            for j in &essential {
                let (Some(pi), Some(pj)) = (
                    t.ok(PderSpace::solve(alg, i), alg.name()),
                    t.ok(PderSpace::solve(alg, j), alg.name()),
                ) else {
                    continue;
                };
                let x = vector::random(alg.field(), alg.dim(), &mut rng);
                let mut pairs = vec![(
                    restricted_right(alg, i.space(), &x),
                    restricted_right(alg, j.space(), &x),
                )];
                for _ in 0..4 {
                    pairs.push((
                        pi.combination(&vector::random(alg.field(), pi.dim(), &mut rng)),
                        pj.combination(&vector::random(alg.field(), pj.dim(), &mut rng)),
                    ));
                }
                let meet = i.space().intersect(j.space());
                for (d, u) in pairs {
                    let on_e = restrict_map(i.space(), &d, &e) == restrict_map(j.space(), &u, &e);
                    let somewhere = essential.iter().any(|k| {
                        k.space().is_subspace_of(&meet)
                            && restrict_map(i.space(), &d, k.space()) == restrict_map(j.space(), &u, k.space())
                    });
                    t.check(on_e == somewhere, || {
                        format!("{}: agreement on E and on some essential ideal differ", alg.name())
                    });
                }
            }
        }
    }
}

fn passman_conditions(t: &mut Tally, seed: u64) {
    for ext in maximal_extensions() {
        let name = ext.big().name().to_string();
        let opts = PassmanOptions {
            seed,
            ..PassmanOptions::default()
        };
        let Some(report) = t.ok(passman_check(&ext, &opts), &name) else {
            continue;
        };
        t.check(report.absorbing.is_certified_true(), || format!("{name}: condition (1) fails"));
        t.check(report.faithful.is_certified_true(), || format!("{name}: condition (2) fails"));
        let derivations = report.derivation_certificate(seed);
        if derivations.verdict && !derivations.certified {
            t.open();
        }
        t.check(derivations.verdict, || format!("{name}: condition (3) fails"));
        let big = ext.big();
        for drop in 0..big.dim() {
            let kept: Vec<_> = (0..big.dim()).filter(|&k| k != drop).map(|k| big.unit(k)).collect();
            let narrowed = PassmanOptions {
                seed,
                s_range: Some(big.span(kept)),
                ..PassmanOptions::default()
            };
            if let Some(r) = t.ok(passman_check(&ext, &narrowed), &name) {
                let c = r.derivation_certificate(seed);
                t.check(c.is_certified_false() && c.witness.is_some(), || {
                    format!("{name}: removing direction {drop} keeps condition (3)")
                });
            }
        }
    }
}
