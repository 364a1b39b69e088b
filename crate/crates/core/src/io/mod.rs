//! Algebra files, matrix sidecars and JSON-lines reports.

mod file;
mod report;

pub use file::{AlgebraFile, BracketEntry, MatrixFile};
pub use report::{digest, Record, Report, Status, TOOL, VERSION};
