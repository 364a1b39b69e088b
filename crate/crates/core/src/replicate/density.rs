use crate::extension::{is_quotient_algebra, Extension, QuotientOptions};
use crate::ideals::enumerate_ideals;
use crate::ideals::lattice::check_enumerable;
use crate::leibniz::catalog;
use crate::operators::{
    assoc_annihilator, is_assoc_semiprime, is_dense_extension, is_left_quotient_algebra,
    is_multiplicatively_semiprime, is_strong_right_ideally_absorbed, stabilizer_subalgebra, tilde_ideal, AssocSide,
    OperatorAlgebra,
};
use crate::replicate::cases::catalog_mod;
use crate::replicate::operators::symmetric_extensions;
use crate::replicate::{Suite, Tally};
use crate::scalar::Field;

pub(super) fn suites() -> Vec<Suite> {
    vec![
        Suite {
            name: "density_examples",
            section: 6,
            run: density_examples,
        },
        Suite {
            name: "stabilizer_is_semiprime",
            section: 6,
            run: stabilizer_is_semiprime,
        },
        Suite {
            name: "essential_ideals_stay_dense",
            section: 6,
            run: essential_ideals_stay_dense,
        },
        Suite {
            name: "dense_absorbed_extensions_are_quotients",
            section: 6,
            run: dense_absorbed_extensions_are_quotients,
        },
    ]
}

fn label(e: &Extension) -> String {
    format!("{} with dim L = {}", e.big().name(), e.small().dim())
}

/// `L = Q`, `span{e2} ⊂ L2` and `sl2 ⊕ 0 ⊂ sl2 ⊕ sl2`, with their densities.
pub fn worked_examples() -> Vec<(Extension, bool)> {
    let q = Field::Rational;
    let l2 = catalog::l2(q);
    let line = l2.span(vec![l2.unit(1)]);
    let pair = catalog::sl2_sl2(q);
    let first = pair.span((0..3).map(|k| pair.unit(k)).collect());
    vec![
        (Extension::trivial(catalog::sl2(q)), true),
        (Extension::new(l2, line).expect("a line of L2 is a subalgebra"), false),
        (Extension::new(pair, first).expect("a summand is a subalgebra"), false),
    ]
}

fn density_examples(t: &mut Tally, _seed: u64) {
    for (e, dense) in worked_examples() {
        if let Some(c) = t.ok(is_dense_extension(&e, false), &label(&e)) {
            t.check(c.certified && c.verdict == dense, || {
                format!("{}: dense should be {dense}, got {}", label(&e), c.verdict)
            });
        }
    }
}

/// Certified dense quotient extensions with `Q` multiplicatively semiprime.
fn hypotheses(t: &mut Tally, seed: u64) -> Vec<Extension> {
    let mut cases: Vec<Extension> = catalog_mod(5).into_iter().map(Extension::trivial).collect();
    cases.extend(symmetric_extensions(seed, 24));
    let opts = QuotientOptions::with_seed(seed).exhaustive();
    let mut out = Vec::new();
    for e in cases {
        let dense = t.ok(is_dense_extension(&e, false), &label(&e));
        let mult = t.ok(is_multiplicatively_semiprime(e.big(), false, seed), &label(&e));
        let quotient = t.ok(is_quotient_algebra(&e, &opts), &label(&e));
        if let (Some(d), Some(m), Some(q)) = (dense, mult, quotient) {
            if d.is_certified_true() && m.is_certified_true() && q.is_certified_true() {
                out.push(e);
            }
        }
    }
    out
}

fn stabilizer_is_semiprime(t: &mut Tally, seed: u64) {
    for e in hypotheses(t, seed) {
        let Some(aq) = t.ok(OperatorAlgebra::of(e.big(), false), &label(&e)) else {
            continue;
        };
        let Some(a0) = t.ok(stabilizer_subalgebra(&aq, e.small()), &label(&e)) else {
            continue;
        };
        match is_assoc_semiprime(&a0, seed) {
            Ok(c) if c.is_certified_true() => t.check(true, String::new),
            Ok(c) if c.verdict => t.open(),
            Ok(_) => t.fail(format!("{}: A_0 has a square-zero ideal", label(&e))),
            Err(err) => t.fail(format!("{}: {err}", label(&e))),
        }
    }
}

fn essential_ideals_stay_dense(t: &mut Tally, seed: u64) {
    for e in hypotheses(t, seed) {
        let small = e.small_algebra();
        if check_enumerable(small.field(), small.dim()).is_err() {
            continue;
        }
        let Some(lat) = t.ok(enumerate_ideals(small), &label(&e)) else {
            continue;
        };
        let Some(aq) = t.ok(OperatorAlgebra::of(e.big(), false), &label(&e)) else {
            continue;
        };
        for i in lat.essential() {
            let iq = e.embed_subspace(i.space());
            let Some(sub) = t.ok(Extension::new(e.big().clone(), iq.clone()), &label(&e)) else {
                continue;
            };
            if let Some(c) = t.ok(is_dense_extension(&sub, false), &label(&e)) {
                t.check(c.verdict, || format!("{}: an essential ideal is not dense in Q", label(&e)));
            }
            let Some(tilde) = t.ok(tilde_ideal(e.big(), e.small(), &iq, false), &label(&e)) else {
                continue;
            };
            if let Some(lan) = t.ok(assoc_annihilator(&aq, &tilde.space, AssocSide::Left), &label(&e)) {
                t.check(lan.is_zero(), || format!("{}: lan_A(Q)(Ĩ) ≠ 0", label(&e)));
            }
        }
    }
}

fn dense_absorbed_extensions_are_quotients(t: &mut Tally, seed: u64) {
    let mut cases: Vec<Extension> = catalog_mod(5).into_iter().map(Extension::trivial).collect();
    cases.extend(symmetric_extensions(seed, 24));
    let opts = QuotientOptions::with_seed(seed).exhaustive();
    let mut applicable = 0usize;
    for e in cases {
        let q = e.big();
        if !(q.ran(&q.full()).is_zero() && q.lan(&q.full()).is_zero()) {
            continue;
        }
        let Some(d) = t.ok(is_dense_extension(&e, false), &label(&e)) else {
            continue;
        };
        if !d.is_certified_true() {
            continue;
        }
        let Some(aq) = t.ok(OperatorAlgebra::of(q, false), &label(&e)) else {
            continue;
        };
        let Some(a0) = t.ok(stabilizer_subalgebra(&aq, e.small()), &label(&e)) else {
            continue;
        };
        let Some(s) = t.ok(is_strong_right_ideally_absorbed(&aq, &a0, &[]), &label(&e)) else {
            continue;
        };
        if !s.is_certified_true() {
            continue;
        }
        applicable += 1;
        if let Some(c) = t.ok(is_quotient_algebra(&e, &opts), &label(&e)) {
            t.check(c.verdict, || format!("{}: dense and absorbed but not a quotient", label(&e)));
        }
        if let Some(c) = t.ok(is_left_quotient_algebra(&aq, &a0, seed), &label(&e)) {
            t.check(c.verdict, || format!("{}: A(Q) is not a left quotient algebra of A_0", label(&e)));
        }
    }
    t.check(applicable > 0, || "no extension satisfied the hypotheses".into());
}
