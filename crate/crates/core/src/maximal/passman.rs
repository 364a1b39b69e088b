use serde::Serialize;

use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::ideals::{
    check_enumerable, enumerate_ideals, is_essential, is_semiprime, minimal_essential_ideal, Certificate, Context,
    Method, Strategy, Witness, DEFAULT_SEED,
};
use crate::leibniz::Ideal;
use crate::linalg::{joint_kernel, Matrix, Subspace};
use crate::maximal::pder::{flatten_map, PderSpace};

/// Inputs to [`passman_check`].
#[derive(Clone, Debug)]
pub struct PassmanOptions {
    pub seed: u64,
    /// Semiprimeness of `L`; computed when absent.
    pub semiprime: Option<Certificate>,
    /// Restricts the `s` searched for in condition (3); defaults to all of `S`.
    pub s_range: Option<Subspace>,
}

impl Default for PassmanOptions {
    fn default() -> Self {
        PassmanOptions {
            seed: DEFAULT_SEED,
            semiprime: None,
            s_range: None,
        }
    }
}

/// Condition (3) on one essential ideal `I` of `L`.
#[derive(Clone, Debug, Serialize)]
pub struct DomainCheck {
    pub ideal: Subspace,
    pub certificate: Certificate,
}

/// The three conditions characterizing `Q_m(L)` among algebras of quotients:
/// (1) `[I, s] ⊆ L` for an essential `I`, (2) `[I, s] = 0` forces `s = 0`,
/// (3) every partial derivation on an essential `I` is some `R_s|_I`.
#[derive(Clone, Debug, Serialize)]
pub struct PassmanReport {
    pub absorbing: Certificate,
    pub faithful: Certificate,
    pub derivations: Vec<DomainCheck>,
    /// Whether (3) covered every essential ideal.
    pub all_domains: bool,
}

impl PassmanReport {
    /// Condition (3) folded over the checked domains.
    pub fn derivation_certificate(&self, seed: u64) -> Certificate {
        if let Some(bad) = self.derivations.iter().find(|d| !d.certificate.verdict) {
            return bad.certificate.clone();
        }
        if self.all_domains {
            Certificate::proven(Method::Enumeration)
        } else {
            Certificate::unrefuted(seed).with_note("checked on E only")
        }
    }

    pub fn all_hold(&self) -> bool {
        self.absorbing.verdict && self.faithful.verdict && self.derivations.iter().all(|d| d.certificate.verdict)
    }
}

/// Checks the three conditions for an extension `L ⊆ S` with `L` semiprime.
pub fn passman_check(ext: &Extension, opts: &PassmanOptions) -> Result<PassmanReport> {
    let small = ext.small_algebra();
    let big = ext.big();
    let f = big.field();
    let semi = match &opts.semiprime {
        Some(c) => c.clone(),
        None => is_semiprime(small, Strategy::Auto, opts.seed)?,
    };
    if !semi.is_certified_true() {
        return Err(Error::NotSemiprime(format!("{} is not certified semiprime", small.name())));
    }
    let lattice = match check_enumerable(f, small.dim()) {
        Ok(_) => Some(enumerate_ideals(small)?),
        Err(_) => None,
    };
    let mut ctx = Context::new(opts.seed).with_semiprime(&semi);
    if let Some(l) = &lattice {
        ctx = ctx.with_lattice(l);
    }

    let istar = ext.common_quotient_ideal()?;
    let absorbing = if is_essential(small, &istar, &ctx).is_certified_true() {
        Certificate::proven(Method::Reduction).with_note("I* is essential")
    } else {
        let (pts, complete) = ext.points(opts.seed);
        let method = if complete { Method::Enumeration } else { Method::Reduction };
        let mut found = None;
        for s in pts {
            let c = is_essential(small, &ext.quotient_ideal(&s)?, &ctx);
            if !c.verdict {
                found = Some(Certificate::refuted(method, Witness::Vector(s)));
                break;
            }
        }
        found.unwrap_or_else(|| {
            if complete {
                Certificate::proven(Method::Enumeration)
            } else {
                Certificate::unrefuted(opts.seed)
            }
        })
    };

    let socle = minimal_essential_ideal(small, &semi, opts.seed)?;
    let e_big: Vec<_> = socle.ideal.space().basis_vectors().iter().map(|u| ext.embed(u)).collect();
    let lefts: Vec<Matrix> = e_big.iter().map(|u| big.left_operator(u)).collect();
    let kernel = joint_kernel(f, big.dim(), &lefts);
    let faithful = if kernel.is_zero() {
        Certificate::proven(Method::Reduction)
    } else {
        Certificate::refuted(Method::Reduction, Witness::Vector(kernel.basis_vector(0).to_vec()))
    };

    let range = opts.s_range.clone().unwrap_or_else(|| big.full());
    let (domains, all_domains): (Vec<Ideal>, bool) = match &lattice {
        Some(l) => (l.essential().cloned().collect(), true),
        None => (vec![socle.ideal.clone()], false),
    };
    let mut derivations = Vec::with_capacity(domains.len());
    for i in &domains {
        derivations.push(DomainCheck {
            ideal: i.space().clone(),
            certificate: inner_surjectivity(ext, i, &range)?,
        });
    }
    Ok(PassmanReport {
        absorbing,
        faithful,
        derivations,
        all_domains,
    })
}

/// Whether every partial derivation on `I` equals `R_s|_I` for some `s` in `range`.
fn inner_surjectivity(ext: &Extension, ideal: &Ideal, range: &Subspace) -> Result<Certificate> {
    let small = ext.small_algebra();
    let big = ext.big();
    let f = big.field();
    let pder = PderSpace::solve(small, ideal)?;
    let i_big: Vec<_> = ideal.space().basis_vectors().iter().map(|u| ext.embed(u)).collect();
    let basis_cols = range.basis_columns();
    let membership = ext.small().membership_matrix();
    let constraints: Vec<Matrix> = if membership.rows() == 0 {
        Vec::new()
    } else {
        i_big
            .iter()
            .map(|u| membership.mul(&big.left_operator(u)).mul(&basis_cols))
            .collect()
    };
    let admissible = joint_kernel(f, range.dim(), &constraints);
    let images: Vec<_> = admissible
        .basis_vectors()
        .iter()
        .map(|t| {
            let s = basis_cols.apply(t);
            let cols: Vec<_> = i_big
                .iter()
                .map(|u| ext.small().coords(&big.bracket(u, &s)).expect("s absorbs I"))
                .collect();
            flatten_map(&Matrix::from_columns(f, small.dim(), &cols))
        })
        .collect();
    let reached = Subspace::from_vectors(f, pder.solutions().ambient(), images);
    Ok(match pder.basis().iter().find(|d| !reached.contains(&flatten_map(&d.matrix))) {
        Some(d) => Certificate::refuted(Method::Reduction, Witness::Map(d.matrix.clone()))
            .with_note("partial derivation not of the form R_s"),
        None => Certificate::proven(Method::Reduction),
    })
}
