use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ideals::lattice::enumerate_ideals_of_kind;
use crate::ideals::predicates::{candidate_ideals, prime_from_lattice, semiprime_from_lattice};
use crate::ideals::{enumerate_ideals, is_essential, is_semiprime, minimal_essential_ideal, Context, IdealLattice, Strategy};
use crate::leibniz::{catalog, Ideal, IdealKind, LeibnizAlgebra};
use crate::linalg::{vector, Subspace};
use crate::replicate::cases::small_tables;
use crate::replicate::{Suite, Tally};

pub(super) fn suites() -> Vec<Suite> {
    vec![
        Suite {
            name: "annihilators_are_ideals",
            section: 2,
            run: annihilators_are_ideals,
        },
        Suite {
            name: "semiprime_has_no_annihilator",
            section: 2,
            run: semiprime_has_no_annihilator,
        },
        Suite {
            name: "sturdy_ideals_are_essential",
            section: 2,
            run: sturdy_ideals_are_essential,
        },
        Suite {
            name: "prime_iff_right_annihilators_vanish",
            section: 2,
            run: prime_iff_right_annihilators_vanish,
        },
        Suite {
            name: "bracket_is_bilinear",
            section: 2,
            run: bracket_is_bilinear,
        },
        Suite {
            name: "essential_ideals_form_a_filter",
            section: 2,
            run: essential_ideals_form_a_filter,
        },
    ]
}

fn is_two_sided(alg: &LeibnizAlgebra, s: &Subspace) -> bool {
    Ideal::new(alg, s.clone(), IdealKind::TwoSided).is_ok()
}

/// Right ideals of a catalog algebra generated by seeded random vectors.
fn sampled_right_ideals(alg: &LeibnizAlgebra, seed: u64) -> Vec<Ideal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Ideal> = (0..alg.dim())
        .map(|k| alg.ideal_generated_by(&[alg.unit(k)], IdealKind::Right))
        .collect();
    for _ in 0..8 {
        let v = vector::random(alg.field(), alg.dim(), &mut rng);
        out.push(alg.ideal_generated_by(&[v], IdealKind::Right));
    }
    out
}

fn lattices() -> impl Iterator<Item = (&'static LeibnizAlgebra, IdealLattice)> {
    small_tables()
        .iter()
        .map(|a| (a, enumerate_ideals(a).expect("small tables are enumerable")))
}

fn annihilators_are_ideals(t: &mut Tally, seed: u64) {
    for alg in small_tables() {
        let Some(rights) = t.ok(enumerate_ideals_of_kind(alg, IdealKind::Right), alg.name()) else {
            continue;
        };
        for h in &rights {
            t.check(is_two_sided(alg, &alg.ran(h.space())), || {
                format!("{}: ran of a right ideal of dim {} is not an ideal", alg.name(), h.dim())
            });
            if h.is_two_sided() || is_two_sided(alg, h.space()) {
                t.check(is_two_sided(alg, &alg.ann(h.space())), || {
                    format!("{}: Ann of an ideal of dim {} is not an ideal", alg.name(), h.dim())
                });
            }
        }
    }
    for alg in catalog::standard() {
        for h in sampled_right_ideals(&alg, seed) {
            t.check(is_two_sided(&alg, &alg.ran(h.space())), || {
                format!("{}: ran of a sampled right ideal is not an ideal", alg.name())
            });
        }
        for h in candidate_ideals(&alg, seed) {
            t.check(is_two_sided(&alg, &alg.ann(h.space())), || {
                format!("{}: Ann of a sampled ideal is not an ideal", alg.name())
            });
        }
    }
}

fn semiprime_has_no_annihilator(t: &mut Tally, seed: u64) {
    let full_ann = |alg: &LeibnizAlgebra| alg.ann(&alg.full()).is_zero() && alg.ran(&alg.full()).is_zero();
    for (alg, lat) in lattices() {
        if semiprime_from_lattice(alg, &lat).is_certified_true() {
            t.check(full_ann(alg), || format!("{}: semiprime with a nonzero annihilator", alg.name()));
        }
    }
    for alg in catalog::standard() {
        match is_semiprime(&alg, Strategy::Auto, seed) {
            Ok(c) if c.is_certified_true() => {
                t.check(full_ann(&alg), || format!("{}: semiprime with a nonzero annihilator", alg.name()))
            }
            Ok(c) if c.verdict => t.open(),
            Ok(_) => {}
            Err(e) => t.fail(format!("{}: {e}", alg.name())),
        }
    }
}

fn sturdy_ideals_are_essential(t: &mut Tally, seed: u64) {
    for (alg, lat) in lattices() {
        let semiprime = semiprime_from_lattice(alg, &lat).is_certified_true();
        let ctx = Context::new(seed).with_lattice(&lat);
        for i in lat.nonzero() {
            let sturdy = alg.ann(i.space()).is_zero();
            let right_sturdy = alg.ran(i.space()).is_zero();
            let essential = lat.is_essential(i.space());
            t.check(is_essential(alg, i, &ctx).verdict == essential, || {
                format!("{}: essential predicate disagrees with the lattice", alg.name())
            });
            if sturdy || right_sturdy {
                t.check(essential, || format!("{}: a sturdy ideal is not essential", alg.name()));
            }
            if semiprime {
                t.check(essential == sturdy && essential == right_sturdy, || {
                    format!("{}: essential and sturdy differ on a semiprime algebra", alg.name())
                });
                t.check(i.space().intersect(&alg.ann(i.space())).is_zero(), || {
                    format!("{}: I meets Ann(I) on a semiprime algebra", alg.name())
                });
                t.check(i.space().intersect(&alg.ran(i.space())).is_zero(), || {
                    format!("{}: I meets ran(I) on a semiprime algebra", alg.name())
                });
            }
        }
    }
    for alg in catalog::standard() {
        let Some(sp) = t.ok(is_semiprime(&alg, Strategy::Auto, seed), alg.name()) else {
            continue;
        };
        let ctx = Context::new(seed).with_semiprime(&sp);
        for i in candidate_ideals(&alg, seed) {
            if alg.ann(i.space()).is_zero() {
                let c = is_essential(&alg, &i, &ctx);
                t.check(c.verdict, || format!("{}: a sturdy candidate ideal is not essential", alg.name()));
            }
        }
    }
}

fn prime_iff_right_annihilators_vanish(t: &mut Tally, _seed: u64) {
    for (alg, lat) in lattices() {
        let by_ran = lat.nonzero().all(|i| alg.ran(i.space()).is_zero());
        let by_pairs = !lat.nonzero().any(|i| {
            lat.nonzero()
                .any(|j| alg.product_space(i.space(), j.space()).is_zero())
        });
        t.check(by_ran == by_pairs, || format!("{}: prime criteria disagree", alg.name()));
        match prime_from_lattice(alg, &lat) {
            Ok(c) => t.check(c.certified && c.verdict == by_pairs, || {
                format!("{}: prime predicate disagrees with the pair search", alg.name())
            }),
            Err(e) => t.fail(format!("{}: {e}", alg.name())),
        }
    }
}

fn bracket_is_bilinear(t: &mut Tally, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for alg in catalog::standard() {
        let f = alg.field();
        let n = alg.dim();
        for _ in 0..16 {
            let [x, y, z] = [0; 3].map(|_| vector::random(f, n, &mut rng));
            let (a, b) = (f.random(&mut rng), f.random(&mut rng));
            let combo = vector::add(&vector::scale(&x, &a), &vector::scale(&y, &b));
            let lhs = alg.bracket(&combo, &z);
            let rhs = vector::add(
                &vector::scale(&alg.bracket(&x, &z), &a),
                &vector::scale(&alg.bracket(&y, &z), &b),
            );
            t.check(lhs == rhs, || format!("{}: bracket is not linear on the left", alg.name()));
            let lhs = alg.bracket(&z, &combo);
            let rhs = vector::add(
                &vector::scale(&alg.bracket(&z, &x), &a),
                &vector::scale(&alg.bracket(&z, &y), &b),
            );
            t.check(lhs == rhs, || format!("{}: bracket is not linear on the right", alg.name()));
            t.check(alg.right_operator(&x).apply(&y) == alg.bracket(&y, &x), || {
                format!("{}: R_x(u) differs from [u, x]", alg.name())
            });
            t.check(alg.left_operator(&x).apply(&y) == alg.bracket(&x, &y), || {
                format!("{}: L_y(u) differs from [y, u]", alg.name())
            });
        }
    }
}

fn essential_ideals_form_a_filter(t: &mut Tally, seed: u64) {
    for (alg, lat) in lattices() {
        let semiprime = semiprime_from_lattice(alg, &lat);
        let essential: Vec<&Ideal> = lat.essential().collect();
        for i in &essential {
            for j in &essential {
                t.check(lat.is_essential(&i.space().intersect(j.space())), || {
                    format!("{}: intersection of essential ideals is not essential", alg.name())
                });
            }
            if semiprime.is_certified_true() {
                for s in 1..=4 {
                    let power = alg.ideal_power(i, s);
                    t.check(alg.ann(power.space()).is_zero(), || {
                        format!("{}: a power of a sturdy ideal has an annihilator", alg.name())
                    });
                }
                let square = alg.ideal_closure(&alg.product_space(i.space(), i.space()));
                t.check(lat.is_essential(square.space()), || {
                    format!("{}: the square of an essential ideal is not essential", alg.name())
                });
            }
        }
        if semiprime.is_certified_true() {
            let socle = minimal_essential_ideal(alg, &semiprime, seed);
            let Some(socle) = t.ok(socle, alg.name()) else {
                continue;
            };
            let e = socle.ideal.space();
            t.check(&alg.product_space(e, e) == e, || format!("{}: E² ≠ E", alg.name()));
            for i in &essential {
                t.check(e.is_subspace_of(i.space()), || {
                    format!("{}: E is not inside an essential ideal", alg.name())
                });
            }
        }
    }
}
