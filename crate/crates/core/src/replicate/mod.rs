//! The property runner: every invariant suite, grouped by section and run
//! over the catalog and generated instances.
//!
//! A suite fails only when a certified property fails. Checks that rest on
//! an uncertified verdict are counted as unverified instead.

mod cases;
mod density;
mod ideals;
mod maximal;
mod operators;
mod quotients;

use serde::Serialize;

use crate::error::{Error, Result};

pub use cases::{catalog_mod, random_extensions, reduce_mod, small_tables};
pub use density::worked_examples;
pub use operators::symmetric_extensions;
pub use quotients::maximal_extensions;

/// Sections with suites.
pub const SECTIONS: [u8; 5] = [2, 3, 4, 5, 6];

/// Failure messages kept per suite.
const MESSAGE_CAP: usize = 8;

/// Running tally of one suite.
#[derive(Clone, Debug, Default)]
pub struct Tally {
    cases: usize,
    failed: usize,
    unverified: usize,
    messages: Vec<String>,
}

impl Tally {
    /// Records a case; `what` describes it when it fails.
    pub fn check(&mut self, holds: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !holds {
            self.fail(what());
        }
    }

    /// Records a case whose premise could not be certified.
    pub fn open(&mut self) {
        self.cases += 1;
        self.unverified += 1;
    }

    /// Records a failure that is not tied to a boolean check.
    pub fn fail(&mut self, message: String) {
        self.failed += 1;
        if self.messages.len() < MESSAGE_CAP {
            self.messages.push(message);
        }
    }

    /// Folds a fallible step into the tally, failing the case on error.
    pub fn ok<T>(&mut self, r: Result<T>, context: &str) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.cases += 1;
                self.fail(format!("{context}: {e}"));
                None
            }
        }
    }
}

/// The outcome of one suite.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteOutcome {
    pub suite: &'static str,
    pub section: u8,
    pub cases: usize,
    pub failures: usize,
    pub unverified: usize,
    pub messages: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

/// A named property suite.
#[derive(Clone, Copy)]
pub struct Suite {
    pub name: &'static str,
    pub section: u8,
    run: fn(&mut Tally, u64),
}

impl Suite {
    pub fn run(&self, seed: u64) -> SuiteOutcome {
        let mut t = Tally::default();
        (self.run)(&mut t, seed);
        SuiteOutcome {
            suite: self.name,
            section: self.section,
            cases: t.cases,
            failures: t.failed,
            unverified: t.unverified,
            messages: t.messages,
        }
    }
}

/// Which suites to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selection {
    All,
    Section(u8),
}

/// Every suite, ordered by section then name.
pub fn suites() -> Vec<Suite> {
    let mut all = Vec::new();
    all.extend(ideals::suites());
    all.extend(quotients::suites());
    all.extend(maximal::suites());
    all.extend(operators::suites());
    all.extend(density::suites());
    all.sort_by_key(|s| (s.section, s.name));
    all
}

pub fn select(selection: Selection) -> Result<Vec<Suite>> {
    match selection {
        Selection::All => Ok(suites()),
        Selection::Section(n) if SECTIONS.contains(&n) => {
            Ok(suites().into_iter().filter(|s| s.section == n).collect())
        }
        Selection::Section(n) => Err(Error::Precondition(format!(
            "no suites for section {n}; choose one of {SECTIONS:?}"
        ))),
    }
}

/// Runs the selected suites concurrently and returns their outcomes in
/// suite order, independent of scheduling.
pub fn run(selection: Selection, seed: u64) -> Result<Vec<SuiteOutcome>> {
    let chosen = select(selection)?;
    let outcomes = std::thread::scope(|scope| {
        let handles: Vec<_> = chosen
            .iter()
            .map(|suite| scope.spawn(move || suite.run(seed)))
            .collect();
        handles
            .into_iter()
            .zip(&chosen)
            .map(|(h, suite)| {
                h.join().unwrap_or_else(|_| SuiteOutcome {
                    suite: suite.name,
                    section: suite.section,
                    cases: 1,
                    failures: 1,
                    unverified: 0,
                    messages: vec!["suite panicked".into()],
                })
            })
            .collect()
    });
    Ok(outcomes)
}
