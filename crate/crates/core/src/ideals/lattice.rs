use serde::Serialize;

use crate::error::{Error, Result};
use crate::leibniz::{Ideal, IdealKind, LeibnizAlgebra};
use crate::linalg::Subspace;
use crate::scalar::{Field, Scalar};

/// Largest number of subspaces the enumeration oracle will visit.
pub const ENUMERATION_CAP: u128 = 1_000_000;

/// Number of `k`-dimensional subspaces of `GF(q)^n`.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = u128::from(q);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.saturating_mul(q.saturating_pow((n - i) as u32).saturating_sub(1));
        den = den.saturating_mul(q.saturating_pow((i + 1) as u32) - 1);
    }
    if num == u128::MAX {
        return u128::MAX;
    }
    num / den
}

/// Total number of subspaces of `GF(q)^n`.
pub fn subspace_count(n: usize, q: u64) -> u128 {
    (0..=n).fold(0u128, |acc, k| acc.saturating_add(gaussian_binomial(n, k, q)))
}

/// Fails unless every subspace of `field^n` can be enumerated under the cap.
pub fn check_enumerable(field: Field, n: usize) -> Result<u128> {
    let Some(q) = field.order() else {
        return Err(Error::OracleUnavailable(field));
    };
    let count = subspace_count(n, q);
    if count > ENUMERATION_CAP {
        return Err(Error::TooLarge {
            count,
            cap: ENUMERATION_CAP,
        });
    }
    Ok(count)
}

/// Calls `visit` on every subspace of `field^n` in canonical form, by
/// dimension and then by pivot pattern. Returns `false` from `visit` to stop.
pub fn for_each_subspace<F>(field: Field, n: usize, mut visit: F) -> Result<()>
where
    F: FnMut(Subspace) -> bool,
{
    check_enumerable(field, n)?;
    let elements = field.elements().expect("finite field");
    let q = elements.len();
    for k in 0..=n {
        for pivots in combinations(n, k) {
            // free slots: (row, col) with col > pivot[row] and col not a pivot
            let free: Vec<(usize, usize)> = (0..k)
                .flat_map(|r| {
                    let piv = &pivots;
                    ((piv[r] + 1)..n).filter(move |c| !piv.contains(c)).map(move |c| (r, c))
                })
                .collect();
            let mut counter = vec![0usize; free.len()];
            loop {
                let mut rows = vec![vec![field.zero(); n]; k];
                for (r, &p) in pivots.iter().enumerate() {
                    rows[r][p] = field.one();
                }
                for (slot, &(r, c)) in free.iter().enumerate() {
                    rows[r][c] = elements[counter[slot]].clone();
                }
                if !visit(Subspace::from_vectors(field, n, rows)) {
                    return Ok(());
                }
                if !advance(&mut counter, q) {
                    break;
                }
            }
        }
    }
    Ok(())
}

fn advance(counter: &mut [usize], base: usize) -> bool {
    for c in counter.iter_mut() {
        *c += 1;
        if *c < base {
            return true;
        }
        *c = 0;
    }
    false
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Every subspace that is an ideal of the given kind.
pub fn enumerate_ideals_of_kind(alg: &LeibnizAlgebra, kind: IdealKind) -> Result<Vec<Ideal>> {
    let mut ideals = Vec::new();
    for_each_subspace(alg.field(), alg.dim(), |s| {
        if let Ok(i) = Ideal::new(alg, s, kind) {
            ideals.push(i);
        }
        true
    })?;
    ideals.sort_by_key(|i| sort_key(i.space()));
    Ok(ideals)
}

fn sort_key(s: &Subspace) -> (usize, Vec<u32>) {
    let flat: Vec<u32> = s
        .basis()
        .flatten()
        .iter()
        .map(|x| x.residue().expect("finite field"))
        .collect();
    (s.dim(), flat)
}

/// The two-sided ideals of an algebra.
#[derive(Clone, Debug, Serialize)]
pub struct IdealLattice {
    ideals: Vec<Ideal>,
    complete: bool,
    essential: Vec<usize>,
}

impl IdealLattice {
    /// Builds a lattice from an arbitrary list of ideals; it is marked
    /// incomplete and its essential family is relative to the list.
    pub fn partial(ideals: Vec<Ideal>) -> Self {
        let mut lat = IdealLattice {
            ideals,
            complete: false,
            essential: Vec::new(),
        };
        lat.essential = lat.compute_essential();
        lat
    }

    fn compute_essential(&self) -> Vec<usize> {
        (0..self.ideals.len())
            .filter(|&i| {
                !self.ideals[i].is_zero()
                    && self
                        .ideals
                        .iter()
                        .filter(|j| !j.is_zero())
                        .all(|j| !self.ideals[i].space().intersect(j.space()).is_zero())
            })
            .collect()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &Ideal> {
        self.ideals.iter().filter(|i| !i.is_zero())
    }

    pub fn essential_indices(&self) -> &[usize] {
        &self.essential
    }

    pub fn essential(&self) -> impl Iterator<Item = &Ideal> {
        self.essential.iter().map(|&i| &self.ideals[i])
    }

    pub fn is_essential(&self, s: &Subspace) -> bool {
        self.essential.iter().any(|&i| self.ideals[i].space() == s)
    }

    pub fn contains(&self, s: &Subspace) -> bool {
        self.ideals.iter().any(|i| i.space() == s)
    }

    /// Nonzero ideals that contain no other nonzero ideal.
    pub fn minimal_ideals(&self) -> Vec<&Ideal> {
        self.nonzero()
            .filter(|i| {
                self.nonzero()
                    .all(|j| j.space() == i.space() || !j.space().is_subspace_of(i.space()))
            })
            .collect()
    }

    /// Intersection of all essential ideals (the whole space when there are none).
    pub fn essential_intersection(&self, alg: &LeibnizAlgebra) -> Subspace {
        self.essential()
            .fold(alg.full(), |acc, i| acc.intersect(i.space()))
    }
}

/// The complete lattice of two-sided ideals, in canonical order.
pub fn enumerate_ideals(alg: &LeibnizAlgebra) -> Result<IdealLattice> {
    let ideals = enumerate_ideals_of_kind(alg, IdealKind::TwoSided)?;
    let mut lat = IdealLattice {
        ideals,
        complete: true,
        essential: Vec::new(),
    };
    lat.essential = lat.compute_essential();
    Ok(lat)
}

/// Every vector of `field^n`, for small finite fields.
pub fn all_vectors(field: Field, n: usize) -> Result<Vec<Vec<Scalar>>> {
    let elements = field.elements().ok_or(Error::OracleUnavailable(field))?;
    let q = elements.len();
    let total = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > ENUMERATION_CAP {
        return Err(Error::TooLarge {
            count: total,
            cap: ENUMERATION_CAP,
        });
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut counter = vec![0usize; n];
    loop {
        out.push(counter.iter().map(|&c| elements[c].clone()).collect());
        if !advance(&mut counter, q) {
            break;
        }
    }
    Ok(out)
}

/// One representative of every line of `field^n` (first nonzero entry 1).
pub fn projective_points(field: Field, n: usize) -> Result<Vec<Vec<Scalar>>> {
    Ok(all_vectors(field, n)?
        .into_iter()
        .filter(|v| v.iter().find(|x| !x.is_zero()).is_some_and(Scalar::is_one))
        .collect())
}

/// Projective points of `field^n` when the field is finite and there are at
/// most `cap` of them.
pub fn points_under_cap(field: Field, n: usize, cap: usize) -> Option<Vec<Vec<Scalar>>> {
    let q = u128::from(field.order()?);
    let lines = q.checked_pow(n as u32).map(|t| (t - 1) / (q - 1))?;
    if lines > cap as u128 {
        return None;
    }
    projective_points(field, n).ok()
}
