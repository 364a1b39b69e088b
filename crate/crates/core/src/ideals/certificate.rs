use serde::Serialize;

use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

/// How a verdict was reached.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Method {
    /// Exhaustive search over a complete finite object.
    Enumeration,
    /// An exact linear-algebra criterion or a checked counterexample.
    Reduction,
    /// A seeded search that found no counterexample.
    Heuristic { seed: u64 },
}

/// Evidence attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Witness {
    Ideal(Subspace),
    IdealPair(Subspace, Subspace),
    Vector(Vec<Scalar>),
    VectorPair(Vec<Scalar>, Vec<Scalar>),
    Triple([usize; 3]),
    Operator(Matrix),
    Map(Matrix),
}

/// A boolean verdict together with how much it can be trusted.
///
/// `certified` implies a non-heuristic method, and a `false` verdict always
/// carries a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub verdict: bool,
    pub certified: bool,
    pub witness: Option<Witness>,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Certificate {
    /// A proven `true`.
    pub fn proven(method: Method) -> Self {
        assert!(!matches!(method, Method::Heuristic { .. }), "heuristic verdicts cannot be certified");
        Certificate {
            verdict: true,
            certified: true,
            witness: None,
            method,
            note: None,
        }
    }

    /// A proven `false` with its counterexample.
    pub fn refuted(method: Method, witness: Witness) -> Self {
        assert!(!matches!(method, Method::Heuristic { .. }), "heuristic verdicts cannot be certified");
        Certificate {
            verdict: false,
            certified: true,
            witness: Some(witness),
            method,
            note: None,
        }
    }

    /// An uncertified `true`: the seeded search found no counterexample.
    pub fn unrefuted(seed: u64) -> Self {
        Certificate {
            verdict: true,
            certified: false,
            witness: None,
            method: Method::Heuristic { seed },
            note: None,
        }
    }

    /// An uncertified `false`, e.g. a verdict based on a caller assertion.
    pub fn suspected_false(seed: u64, witness: Witness) -> Self {
        Certificate {
            verdict: false,
            certified: false,
            witness: Some(witness),
            method: Method::Heuristic { seed },
            note: None,
        }
    }

    pub fn with_witness(mut self, witness: Witness) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn is_certified_true(&self) -> bool {
        self.verdict && self.certified
    }

    pub fn is_certified_false(&self) -> bool {
        !self.verdict && self.certified
    }

    /// Checks the structural invariants of the certificate.
    pub fn is_well_formed(&self) -> bool {
        let method_ok = !self.certified || !matches!(self.method, Method::Heuristic { .. });
        let witness_ok = self.verdict || self.witness.is_some();
        method_ok && witness_ok
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Field;

    #[test]
    fn constructors_respect_invariants() {
        assert!(Certificate::proven(Method::Reduction).is_well_formed());
        let w = Witness::Vector(vec![Field::Rational.one()]);
        assert!(Certificate::refuted(Method::Enumeration, w.clone()).is_well_formed());
        assert!(Certificate::unrefuted(1).is_well_formed());
        assert!(!Certificate::unrefuted(1).certified);
        assert!(Certificate::suspected_false(1, w).is_well_formed());
    }

    #[test]
    #[should_panic]
    fn heuristic_cannot_be_certified() {
        Certificate::proven(Method::Heuristic { seed: 0 });
    }
}
