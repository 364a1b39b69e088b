use crate::error::{Error, Result};
use crate::leibniz::{Ideal, LeibnizAlgebra};

/// A finite family of nonzero ideals closed under the filter axiom, and
/// optionally the power axiom.
#[derive(Clone, Debug)]
pub struct IdealFilter {
    members: Vec<Ideal>,
    power: bool,
}

impl IdealFilter {
    /// Validates the filter axioms; the error names the first violated one.
    pub fn new(alg: &LeibnizAlgebra, members: Vec<Ideal>, power: bool) -> Result<IdealFilter> {
        if members.is_empty() {
            return Err(Error::InvalidFilter("a filter must be nonempty".into()));
        }
        for (k, m) in members.iter().enumerate() {
            if m.is_zero() {
                return Err(Error::InvalidFilter(format!("member {k} is the zero ideal")));
            }
            if !m.is_two_sided() || !m.verify(alg) {
                return Err(Error::InvalidFilter(format!("member {k} is not a two-sided ideal")));
            }
        }
        for (a, ia) in members.iter().enumerate() {
            for (b, ib) in members.iter().enumerate().skip(a + 1) {
                let meet = ia.space().intersect(ib.space());
                if !members.iter().any(|m| m.space().is_subspace_of(&meet)) {
                    return Err(Error::InvalidFilter(format!(
                        "filter axiom fails: no member inside the intersection of members {a} and {b}"
                    )));
                }
            }
        }
        if power {
            for (k, m) in members.iter().enumerate() {
                let sq = alg.product_space(m.space(), m.space());
                if !members.iter().any(|x| x.space().is_subspace_of(&sq)) {
                    return Err(Error::InvalidFilter(format!(
                        "power axiom fails: no member inside [I, I] for member {k}"
                    )));
                }
            }
        }
        Ok(IdealFilter { members, power })
    }

    /// Additionally requires every member to have zero annihilator.
    pub fn new_sturdy_power(alg: &LeibnizAlgebra, members: Vec<Ideal>) -> Result<IdealFilter> {
        let f = IdealFilter::new(alg, members, true)?;
        for (k, m) in f.members.iter().enumerate() {
            if !alg.ann(m.space()).is_zero() {
                return Err(Error::InvalidFilter(format!("member {k} is not sturdy")));
            }
        }
        Ok(f)
    }

    /// The chain `I, [I,I], [[I,I],[I,I]], …` until it stabilizes.
    pub fn derived_chain(alg: &LeibnizAlgebra, start: &Ideal) -> Result<IdealFilter> {
        let mut members = Vec::new();
        for s in alg.derived_series(start.space()) {
            let ideal = Ideal::two_sided(alg, s)
                .map_err(|e| Error::InvalidFilter(format!("derived term is not an ideal: {e}")))?;
            members.push(ideal);
        }
        IdealFilter::new_sturdy_power(alg, members)
    }

    pub fn members(&self) -> &[Ideal] {
        &self.members
    }

    pub fn is_power(&self) -> bool {
        self.power
    }

    /// A member contained in every other member, if one exists.
    pub fn least_member(&self) -> Option<&Ideal> {
        self.members
            .iter()
            .find(|m| self.members.iter().all(|o| m.space().is_subspace_of(o.space())))
    }
}
