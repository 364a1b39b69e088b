use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::ideals::{Certificate, Method};

pub const TOOL: &str = "leibquot";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Hex SHA-256 of an input file.
pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// The standing of one report record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// A computed value with nothing to compare against.
    Info,
    Pass,
    /// A certified result contradicts what was required.
    Fail,
    /// A result differs from what was required but is not certified.
    Unverified,
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub operation: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub value: Value,
}

/// Results of one command run, written as JSON lines: a header, one line
/// per record in insertion order, and a summary carrying the only timing field.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub seed: u64,
    pub input_sha256: Option<String>,
    pub records: Vec<Record>,
}

impl Report {
    pub fn new(command: impl Into<String>, seed: u64) -> Report {
        Report {
            command: command.into(),
            seed,
            input_sha256: None,
            records: Vec::new(),
        }
    }

    pub fn with_input(mut self, bytes: &[u8]) -> Report {
        self.input_sha256 = Some(digest(bytes));
        self
    }

    pub fn push(&mut self, operation: impl Into<String>, status: Status, certificate: Option<Certificate>, value: Value) {
        self.records.push(Record {
            operation: operation.into(),
            status,
            certificate,
            value,
        });
    }

    pub fn info(&mut self, operation: impl Into<String>, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("report values serialize");
        self.push(operation, Status::Info, None, value);
    }

    /// A verdict recorded without an expectation.
    pub fn certificate(&mut self, operation: impl Into<String>, cert: &Certificate) {
        self.push(operation, Status::Info, Some(cert.clone()), Value::Null);
    }

    /// A verdict compared with the value it should have. A mismatch fails
    /// only when the verdict is certified.
    pub fn expect(&mut self, operation: impl Into<String>, cert: &Certificate, expected: bool) -> Status {
        let status = if cert.verdict == expected {
            Status::Pass
        } else if cert.certified {
            Status::Fail
        } else {
            Status::Unverified
        };
        self.push(operation, status, Some(cert.clone()), json!({ "expected": expected }));
        status
    }

    /// An exact check that either holds or fails.
    pub fn check(&mut self, operation: impl Into<String>, holds: bool, value: impl Serialize) -> Status {
        let status = if holds { Status::Pass } else { Status::Fail };
        let value = serde_json::to_value(value).expect("report values serialize");
        self.push(operation, status, None, value);
        status
    }

    pub fn failures(&self) -> usize {
        self.records.iter().filter(|r| r.status == Status::Fail).count()
    }

    pub fn unverified(&self) -> usize {
        self.records.iter().filter(|r| r.status == Status::Unverified).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    fn header(&self) -> Value {
        json!({
            "record": "header",
            "tool": TOOL,
            "version": VERSION,
            "command": self.command,
            "input_sha256": self.input_sha256,
            "seed": self.seed,
        })
    }

    fn summary(&self, elapsed: Option<Duration>) -> Value {
        let mut s = json!({
            "record": "summary",
            "status": if self.passed() { "pass" } else { "fail" },
            "records": self.records.len(),
            "failures": self.failures(),
            "unverified": self.unverified(),
        });
        if let Some(d) = elapsed {
            s["elapsed_ms"] = json!(d.as_millis() as u64);
        }
        s
    }

    /// The JSON-lines body. With `elapsed` unset the output depends only on
    /// the input and the seed.
    pub fn to_json_lines(&self, elapsed: Option<Duration>) -> String {
        let mut out = String::new();
        out.push_str(&self.header().to_string());
        out.push('\n');
        for r in &self.records {
            let mut v = serde_json::to_value(r).expect("records serialize");
            v["record"] = json!("result");
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out.push_str(&self.summary(elapsed).to_string());
        out.push('\n');
        out
    }

    /// A short human-readable rendering.
    pub fn to_text(&self, elapsed: Option<Duration>) -> String {
        let mut out = String::new();
        let _ = write!(out, "{TOOL} {VERSION} {} (seed {:#x}", self.command, self.seed);
        if let Some(d) = &self.input_sha256 {
            let _ = write!(out, ", input {}", &d[..12]);
        }
        out.push_str(")\n");
        for r in &self.records {
            let tag = match r.status {
                Status::Info => "info",
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Unverified => "open",
            };
            let _ = write!(out, "  {tag:<4}  {}", r.operation);
            if let Some(c) = &r.certificate {
                let how = match c.method {
                    Method::Enumeration => "enumeration".to_string(),
                    Method::Reduction => "reduction".to_string(),
                    Method::Heuristic { seed } => format!("heuristic, seed {seed:#x}"),
                };
                let trust = if c.certified { "certified" } else { "uncertified" };
                let _ = write!(out, ": {} ({trust}, {how})", c.verdict);
                if let Some(w) = &c.witness {
                    let _ = write!(out, " witness {}", serde_json::to_string(w).unwrap_or_default());
                }
            }
            if !r.value.is_null() {
                let _ = write!(out, " {}", r.value);
            }
            out.push('\n');
        }
        let _ = write!(
            out,
            "{}: {} records, {} failures, {} unverified",
            if self.passed() { "pass" } else { "fail" },
            self.records.len(),
            self.failures(),
            self.unverified()
        );
        if let Some(d) = elapsed {
            let _ = write!(out, " in {} ms", d.as_millis());
        }
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::Witness;

    #[test]
    fn digest_matches_known_value() {
        assert_eq!(
            digest(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    #[test]
    fn expectations_fail_only_when_certified() {
        let mut r = Report::new("t", 1);
        assert_eq!(r.expect("a", &Certificate::proven(Method::Reduction), true), Status::Pass);
        assert_eq!(r.expect("b", &Certificate::unrefuted(1), false), Status::Unverified);
        let refuted = Certificate::refuted(Method::Reduction, Witness::Triple([0, 1, 2]));
        assert_eq!(r.expect("c", &refuted, true), Status::Fail);
        assert_eq!(r.failures(), 1);
        assert!(!r.passed());
    }

    #[test]
    fn timing_appears_only_in_the_summary() {
        let mut r = Report::new("t", 7).with_input(b"x");
        r.info("dim", 3);
        let a = r.to_json_lines(None);
        let b = r.to_json_lines(Some(Duration::from_millis(5)));
        assert!(!a.contains("elapsed_ms") && b.contains("elapsed_ms"));
        let body = |s: &str| s.lines().take(2).map(str::to_string).collect::<Vec<_>>();
        assert_eq!(body(&a), body(&b));
        for line in b.lines() {
            serde_json::from_str::<Value>(line).unwrap();
        }
    }
}
