use crate::extension::{
    default_filter, is_ideally_absorbed, is_martindale_quotient, is_quotient_algebra, is_weak_quotient, Extension,
    IdealFilter, QuotientOptions,
};
use crate::ideals::lattice::check_enumerable;
use crate::ideals::{enumerate_ideals, is_semiprime, Certificate, IdealLattice, Strategy};
use crate::leibniz::catalog;
use crate::maximal::{build_qmax, QmaxOptions};
use crate::replicate::cases::{random_extensions, reduce_mod};
use crate::replicate::{Suite, Tally};
use crate::scalar::Field;

/// Generated extensions per suite.
pub const EXTENSIONS: usize = 100;

pub(super) fn suites() -> Vec<Suite> {
    vec![
        Suite {
            name: "quotient_iff_ideally_absorbed",
            section: 3,
            run: quotient_iff_ideally_absorbed,
        },
        Suite {
            name: "quotient_ideal_is_largest",
            section: 3,
            run: quotient_ideal_is_largest,
        },
        Suite {
            name: "quotients_are_faithful",
            section: 3,
            run: quotients_are_faithful,
        },
        Suite {
            name: "weak_quotients_lift_sturdy_ideals",
            section: 3,
            run: weak_quotients_lift_sturdy_ideals,
        },
        Suite {
            name: "quotients_of_essential_ideals",
            section: 3,
            run: quotients_of_essential_ideals,
        },
        Suite {
            name: "martindale_quotients_agree",
            section: 3,
            run: martindale_quotients_agree,
        },
    ]
}

/// `φ(L) ⊆ Q_m(L)` for the semiprime catalog members over GF(5).
pub fn maximal_extensions() -> Vec<Extension> {
    [catalog::sl2(Field::Prime(5)), catalog::sl2_sl2(Field::Rational)]
        .iter()
        .filter_map(|a| match a.field() {
            Field::Rational => reduce_mod(a, 5).ok(),
            _ => Some(a.clone()),
        })
        .filter_map(|a| build_qmax(&a, &QmaxOptions::default()).ok())
        .filter_map(|m| m.extension().ok())
        .collect()
}

/// The generated extensions followed by the maximal ones.
pub fn agreement_cases(seed: u64) -> Vec<Extension> {
    let mut all = random_extensions(seed, EXTENSIONS);
    all.extend(maximal_extensions());
    all
}

fn label(e: &Extension) -> String {
    format!("{} with dim L = {}", e.big().name(), e.small().dim())
}

fn exact(seed: u64) -> QuotientOptions {
    QuotientOptions::with_seed(seed).exhaustive()
}

fn small_lattice(e: &Extension) -> Option<IdealLattice> {
    check_enumerable(e.small_algebra().field(), e.small_algebra().dim()).ok()?;
    enumerate_ideals(e.small_algebra()).ok()
}

fn quotient_iff_ideally_absorbed(t: &mut Tally, seed: u64) {
    let opts = exact(seed);
    for e in agreement_cases(seed) {
        let (Some(q), Some(a)) = (
            t.ok(is_quotient_algebra(&e, &opts), &label(&e)),
            t.ok(is_ideally_absorbed(&e, &opts), &label(&e)),
        ) else {
            continue;
        };
        if !(q.certified && a.certified) {
            t.open();
        }
        t.check(q.verdict == a.verdict, || {
            format!("{}: quotient {} but ideally absorbed {}", label(&e), q.verdict, a.verdict)
        });
        let fast = QuotientOptions::with_seed(seed);
        if let Some(r) = t.ok(is_quotient_algebra(&e, &fast), &label(&e)) {
            t.check(r.verdict == q.verdict, || format!("{}: reduction and scan disagree", label(&e)));
        }
    }
}

fn quotient_ideal_is_largest(t: &mut Tally, seed: u64) {
    for e in random_extensions(seed ^ 1, 24) {
        let Some(lat) = small_lattice(&e) else {
            continue;
        };
        for q in e.test_set(seed) {
            let Some(lq) = t.ok(e.quotient_ideal(&q), &label(&e)) else {
                continue;
            };
            t.check(lq.verify(e.small_algebra()), || format!("{}: (L:q) is not an ideal", label(&e)));
            let absorbing = e.absorbing_subspace(&e.big().span(vec![q.clone()]));
            for i in lat.ideals() {
                if i.space().is_subspace_of(&absorbing) {
                    t.check(i.space().is_subspace_of(lq.space()), || {
                        format!("{}: an absorbing ideal escapes (L:q)", label(&e))
                    });
                }
            }
        }
    }
}

fn quotients_are_faithful(t: &mut Tally, seed: u64) {
    let opts = exact(seed);
    for e in agreement_cases(seed) {
        let Some(c) = t.ok(is_quotient_algebra(&e, &opts), &label(&e)) else {
            continue;
        };
        if !c.is_certified_true() {
            continue;
        }
        t.check(e.big().ann(e.small()).is_zero(), || format!("{}: Ann_Q(L) ≠ 0", label(&e)));
        for k in 0..e.big().dim() {
            if let Some(lq) = t.ok(e.quotient_ideal(&e.big().unit(k)), &label(&e)) {
                t.check(e.small_algebra().ann(lq.space()).is_zero(), || {
                    format!("{}: Ann_L((L:b_{k})) ≠ 0", label(&e))
                });
            }
        }
    }
}

fn weak_quotients_lift_sturdy_ideals(t: &mut Tally, seed: u64) {
    let opts = exact(seed);
    for e in agreement_cases(seed).into_iter().take(40) {
        let Some(w) = t.ok(is_weak_quotient(&e, &opts), &label(&e)) else {
            continue;
        };
        if !w.is_certified_true() {
            continue;
        }
        let Some(lat) = small_lattice(&e) else {
            continue;
        };
        let small = e.small_algebra();
        for i in lat.nonzero() {
            if small.ann(i.space()).is_zero() {
                t.check(e.ann_in_big(i.space()).is_zero(), || {
                    format!("{}: a sturdy ideal of L has a nonzero annihilator in Q", label(&e))
                });
            }
            if small.ran(i.space()).is_zero() {
                t.check(e.ran_in_big(i.space()).is_zero(), || {
                    format!("{}: ran_L(I) = 0 but ran_Q(I) ≠ 0", label(&e))
                });
            }
        }
        let sp = is_semiprime(small, Strategy::Auto, seed);
        if sp.as_ref().map(Certificate::is_certified_true).unwrap_or(false) {
            if let Ok(big_lat) = check_enumerable(e.big().field(), e.big().dim()).and_then(|_| enumerate_ideals(e.big())) {
                for j in big_lat.nonzero() {
                    t.check(!j.space().intersect(e.small()).is_zero(), || {
                        format!("{}: a nonzero ideal of Q misses L", label(&e))
                    });
                }
            }
            match is_semiprime(e.big(), Strategy::Auto, seed) {
                Ok(c) if c.is_certified_true() => t.check(true, String::new),
                Ok(c) if c.verdict => t.open(),
                Ok(_) => t.fail(format!("{}: Q is not semiprime", label(&e))),
                Err(err) => t.fail(format!("{}: {err}", label(&e))),
            }
        }
    }
}

fn quotients_of_essential_ideals(t: &mut Tally, seed: u64) {
    let opts = exact(seed);
    for e in agreement_cases(seed) {
        let small = e.small_algebra();
        let Some(lat) = small_lattice(&e) else {
            continue;
        };
        let Ok(sp) = is_semiprime(small, Strategy::Auto, seed) else {
            continue;
        };
        if !sp.is_certified_true() {
            continue;
        }
        let Some(c) = t.ok(is_quotient_algebra(&e, &opts), &label(&e)) else {
            continue;
        };
        if !c.is_certified_true() {
            continue;
        }
        for i in lat.essential() {
            let sub = e.embed_subspace(i.space());
            let Some(ext) = t.ok(Extension::new(e.big().clone(), sub), &label(&e)) else {
                continue;
            };
            if let Some(r) = t.ok(is_quotient_algebra(&ext, &opts), &label(&e)) {
                t.check(r.verdict, || format!("{}: not a quotient of an essential ideal", label(&e)));
            }
        }
    }
}

fn martindale_quotients_agree(t: &mut Tally, seed: u64) {
    let opts = exact(seed);
    for e in agreement_cases(seed) {
        let Some(q) = t.ok(is_quotient_algebra(&e, &opts), &label(&e)) else {
            continue;
        };
        if let Ok(filter) = default_filter(&e) {
            if let Some(m) = t.ok(is_martindale_quotient(&e, &filter, &opts), &label(&e)) {
                if m.verdict {
                    t.check(q.verdict, || format!("{}: Martindale-like but not a quotient", label(&e)));
                }
            }
        }
        let small = e.small_algebra();
        let semiprime = is_semiprime(small, Strategy::Auto, seed).map(|c| c.is_certified_true());
        if !(q.is_certified_true() && semiprime.unwrap_or(false)) {
            continue;
        }
        let Some(lat) = small_lattice(&e) else {
            continue;
        };
        let sturdy: Vec<_> = lat
            .nonzero()
            .filter(|i| small.ann(i.space()).is_zero())
            .cloned()
            .collect();
        let Some(filter) = t.ok(IdealFilter::new_sturdy_power(small, sturdy), &label(&e)) else {
            continue;
        };
        if let Some(m) = t.ok(is_martindale_quotient(&e, &filter, &opts), &label(&e)) {
            t.check(m.verdict, || format!("{}: a quotient of a semiprime L is not Martindale-like", label(&e)));
        }
    }
}
