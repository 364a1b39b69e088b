//! Command implementations behind the `leibquot` binary.
//!
//! Each command returns a [`Report`] together with the exit code it implies:
//! 0 pass, 1 input error, 2 property violation or rejection, 3 capability
//! unavailable.

use std::fmt;
use std::path::{Path, PathBuf};

use serde_json::json;

use leibquot_core::extension::{is_ideally_absorbed, is_quotient_algebra, is_weak_quotient, Extension, QuotientOptions};
use leibquot_core::ideals::{is_prime, is_semiprime, minimal_essential_ideal, Strategy};
use leibquot_core::io::{AlgebraFile, MatrixFile, Report, Status};
use leibquot_core::maximal::{build_qmax, QmaxOptions};
use leibquot_core::operators::{
    is_dense_extension, is_left_quotient_algebra, is_strong_right_ideally_absorbed, stabilizer_subalgebra,
    OperatorAlgebra,
};
use leibquot_core::replicate::{self, Selection};
use leibquot_core::{Certificate, Error, LeibnizAlgebra, Scalar, Subspace};

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Pass = 0,
    Input = 1,
    Violation = 2,
    Unavailable = 3,
}

impl Exit {
    pub fn code(self) -> i32 {
        self as i32
    }
}

/// A command that stopped before producing a report.
#[derive(Debug)]
pub struct Failure {
    pub exit: Exit,
    pub message: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for Failure {}

impl Failure {
    pub fn input(message: impl Into<String>) -> Failure {
        Failure {
            exit: Exit::Input,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let exit = match &e {
            Error::OracleUnavailable(_) | Error::TooLarge { .. } => Exit::Unavailable,
            Error::NotSemiprime(_) | Error::NotSymmetric | Error::SocleFailure(_) | Error::InternalFault(_) => {
                Exit::Violation
            }
            _ => Exit::Input,
        };
        Failure {
            exit,
            message: e.to_string(),
        }
    }
}

/// A finished command.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub exit: Exit,
}

impl Outcome {
    fn from_report(report: Report) -> Outcome {
        let exit = if report.passed() { Exit::Pass } else { Exit::Violation };
        Outcome { report, exit }
    }
}

pub type CmdResult = Result<Outcome, Failure>;

/// Reads and parses an algebra file.
pub fn load(path: &Path) -> Result<(AlgebraFile, Vec<u8>), Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let text = std::str::from_utf8(&bytes).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let file = AlgebraFile::from_json(text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    Ok((file, bytes))
}

fn expect_flag(report: &mut Report, file: &AlgebraFile, key: &str, actual: bool) {
    match file.expected_bool(key) {
        Some(want) => {
            report.check(format!("expected.{key}"), want == actual, json!({ "expected": want, "actual": actual }));
        }
        None => report.info(key, actual),
    }
}

fn expect_cert(report: &mut Report, file: &AlgebraFile, key: &str, cert: &Certificate) {
    match file.expected_bool(key) {
        Some(want) => {
            report.expect(key, cert, want);
        }
        None => report.certificate(key, cert),
    }
}

fn expect_count(report: &mut Report, file: &AlgebraFile, key: &str, actual: usize) {
    match file.expected_usize(key) {
        Some(want) => {
            report.check(key, want == actual, json!({ "expected": want, "actual": actual }));
        }
        None => report.info(key, actual),
    }
}

/// Parses the file and evaluates both Leibniz identities on every basis triple.
pub fn cmd_validate(path: &Path, seed: u64) -> CmdResult {
    let (file, bytes) = load(path)?;
    let alg = file.to_algebra()?;
    let mut report = Report::new("validate", seed).with_input(&bytes);
    report.info("algebra", json!({ "name": alg.name(), "field": alg.field(), "dim": alg.dim() }));
    let ids = alg.validate_identities();
    expect_flag(&mut report, &file, "right_leibniz", ids.right);
    expect_flag(&mut report, &file, "left_leibniz", ids.left);
    expect_flag(&mut report, &file, "symmetric", ids.symmetric);
    if let Some(v) = &ids.right_violation {
        report.info("right_violation", v);
    }
    if let Some(v) = &ids.left_violation {
        report.info("left_violation", v);
    }
    if !ids.right {
        report.check("right_leibniz_identity", false, &ids.right_violation);
    }
    Ok(Outcome::from_report(report))
}

fn require_leibniz(alg: &LeibnizAlgebra) -> Result<(), Failure> {
    let ids = alg.identities();
    if ids.right {
        return Ok(());
    }
    let triple = ids.right_violation.as_ref().map(|v| v.triple);
    Err(Failure {
        exit: Exit::Violation,
        message: format!("{} fails the right Leibniz identity at basis triple {triple:?}", alg.name()),
    })
}

/// Annihilators, semiprimeness, primeness and the minimal essential ideal.
pub fn cmd_analyze(path: &Path, oracle: bool, seed: u64) -> CmdResult {
    let (file, bytes) = load(path)?;
    let alg = file.to_algebra()?;
    require_leibniz(&alg)?;
    let strategy = if oracle { Strategy::Oracle } else { Strategy::Auto };
    let mut report = Report::new("analyze", seed).with_input(&bytes);
    report.info(
        "algebra",
        json!({ "name": alg.name(), "field": alg.field(), "dim": alg.dim(), "oracle": oracle }),
    );
    let full = alg.full();
    let ann = alg.ann(&full);
    expect_count(&mut report, &file, "ann_dim", ann.dim());
    report.info("lan_dim", alg.lan(&full).dim());
    report.info("ran_dim", alg.ran(&full).dim());
    report.info("leibniz_kernel_dim", alg.leibniz_kernel().dim());
    let semiprime = is_semiprime(&alg, strategy, seed)?;
    expect_cert(&mut report, &file, "semiprime", &semiprime);
    let prime = is_prime(&alg, strategy, seed)?;
    expect_cert(&mut report, &file, "prime", &prime);
    if semiprime.verdict {
        let socle = minimal_essential_ideal(&alg, &semiprime, seed)?;
        let e = socle.ideal.space();
        report.info(
            "essential_socle",
            json!({
                "dim": e.dim(),
                "equals_algebra": e.dim() == alg.dim(),
                "minimal_ideals": socle.minimal.iter().map(|i| i.dim()).collect::<Vec<_>>(),
                "basis": e.basis_vectors(),
                "method": socle.method,
            }),
        );
    }
    Ok(Outcome::from_report(report))
}

/// The path of the `φ` sidecar written next to `out`.
pub fn phi_path(out: &Path) -> PathBuf {
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    out.with_file_name(format!("{stem}.phi.json"))
}

/// Builds `Q_m(L)`, checks its defining properties, and optionally writes it.
pub fn cmd_qmax(path: &Path, out: Option<&Path>, assume_semiprime: bool, seed: u64) -> CmdResult {
    let (file, bytes) = load(path)?;
    let alg = file.to_algebra()?;
    require_leibniz(&alg)?;
    let mut report = Report::new("qmax", seed).with_input(&bytes);
    let semiprime = is_semiprime(&alg, Strategy::Auto, seed)?;
    if !semiprime.is_certified_true() && !(assume_semiprime && !semiprime.is_certified_false()) {
        report.push("semiprime", Status::Fail, Some(semiprime), json!({ "required": true }));
        return Ok(Outcome {
            report,
            exit: Exit::Violation,
        });
    }
    report.certificate("semiprime", &semiprime);
    let opts = QmaxOptions { seed, assume_semiprime };
    let m = build_qmax(&alg, &opts)?;
    let q = m.algebra();
    report.info(
        "essential_socle",
        json!({ "dim": m.essential().dim(), "basis": m.essential().space().basis_vectors() }),
    );
    expect_count(&mut report, &file, "qmax_dim", m.dim());
    report.check("qmax_right_leibniz", q.is_right_leibniz(), &q.identities().right_violation);
    report.check("phi_injective", m.phi().rank() == alg.dim(), json!({ "rank": m.phi().rank() }));
    let homomorphism = (0..alg.dim()).all(|i| {
        (0..alg.dim()).all(|j| m.phi().apply(alg.basis_product(i, j)) == q.bracket(&m.phi().column(i), &m.phi().column(j)))
    });
    report.check("phi_homomorphism", homomorphism, json!(null));
    report.info("phi_surjective", m.phi_image().is_full());
    let q_semiprime = is_semiprime(q, Strategy::Auto, seed)?;
    report.expect("qmax_semiprime", &q_semiprime, true);
    let ext = m.extension()?;
    let quotient = is_quotient_algebra(&ext, &QuotientOptions::with_seed(seed))?;
    report.expect("phi_image_quotient", &quotient, true);
    if let Some(out) = out {
        let written = AlgebraFile::from_algebra(q);
        write(out, &written.to_json())?;
        let phi = MatrixFile::from_matrix(format!("phi: {} -> {}", alg.name(), q.name()), m.phi());
        let sidecar = phi_path(out);
        write(&sidecar, &phi.to_json())?;
        report.info(
            "written",
            json!({ "algebra": out.display().to_string(), "phi": sidecar.display().to_string() }),
        );
    }
    Ok(Outcome::from_report(report))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, format!("{text}\n")).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

/// Parses a `--subalgebra` argument into vectors of `Q`.
///
/// `@path` reads a matrix file (its columns are the vectors) or a JSON list
/// of coordinate lists; otherwise the argument is inline, vectors separated by
/// `;` and coordinates by `,`, e.g. `0,1;` or `1,0,0;0,1/2,0`.
pub fn parse_subalgebra(arg: &str, q: &LeibnizAlgebra) -> Result<Vec<Vec<Scalar>>, Failure> {
    let f = q.field();
    let rows: Vec<Vec<String>> = if let Some(path) = arg.strip_prefix('@') {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{path}: {e}")))?;
        if let Ok(m) = MatrixFile::from_json(&text) {
            let m = m.to_matrix()?;
            return Ok(m.columns());
        }
        let raw: Vec<Vec<serde_json::Value>> =
            serde_json::from_str(&text).map_err(|e| Failure::input(format!("{path}: {e}")))?;
        raw.into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|v| match v {
                        serde_json::Value::String(s) => s,
                        other => other.to_string(),
                    })
                    .collect()
            })
            .collect()
    } else {
        arg.split(';')
            .map(str::trim)
            .filter(|r| !r.is_empty())
            .map(|r| r.split(',').map(|c| c.trim().to_string()).collect())
            .collect()
    };
    rows.into_iter()
        .enumerate()
        .map(|(n, r)| {
            if r.len() != q.dim() {
                return Err(Failure::input(format!(
                    "subalgebra vector {n} has {} coordinates, Q has dimension {}",
                    r.len(),
                    q.dim()
                )));
            }
            r.iter()
                .map(|c| f.parse(c).map_err(|e| Failure::input(format!("subalgebra vector {n}: {e}"))))
                .collect()
        })
        .collect()
}

/// Decides whether `Q` is an algebra of quotients of the given subalgebra.
pub fn cmd_check_quotient(path: &Path, subalgebra: Option<&str>, seed: u64) -> CmdResult {
    let (file, bytes) = load(path)?;
    let q = file.to_algebra()?;
    require_leibniz(&q)?;
    let l: Subspace = match subalgebra {
        Some(arg) => q.span(parse_subalgebra(arg, &q)?),
        None => q.full(),
    };
    if !q.is_subalgebra(&l) {
        return Err(Failure::input("the given subalgebra is not closed under the bracket"));
    }
    let ext = Extension::new(q.clone(), l.clone())?;
    let mut report = Report::new("check-quotient", seed).with_input(&bytes);
    report.info("extension", json!({ "q": q.name(), "dim_q": q.dim(), "dim_l": l.dim() }));
    let opts = QuotientOptions::with_seed(seed);
    let weak = is_weak_quotient(&ext, &opts)?;
    let quotient = is_quotient_algebra(&ext, &opts)?;
    let absorbed = is_ideally_absorbed(&ext, &opts)?;
    report.certificate("weak_quotient", &weak);
    report.certificate("quotient", &quotient);
    report.certificate("ideally_absorbed", &absorbed);
    let mut verdicts = vec![("quotient", quotient.clone()), ("ideally_absorbed", absorbed.clone())];
    if q.is_symmetric() {
        let aq = OperatorAlgebra::of(&q, false)?;
        let a0 = stabilizer_subalgebra(&aq, &l)?;
        report.info("operator_algebras", json!({ "dim_a_q": aq.dim(), "dim_a_0": a0.dim() }));
        let left = is_left_quotient_algebra(&aq, &a0, seed)?;
        report.certificate("operator_left_quotient", &left);
        let strong = is_strong_right_ideally_absorbed(&aq, &a0, &[])?;
        report.certificate("operator_strong_right_absorbed", &strong);
        let dense = is_dense_extension(&ext, false)?;
        report.certificate("dense", &dense);
        verdicts.push(("operator_left_quotient", left));
        verdicts.push(("dense", dense));
    } else {
        report.info("operator_bridge", "skipped: Q is not symmetric");
    }
    report.info("weak_quotient_implied", !quotient.verdict || weak.verdict);
    let matrix: Vec<Vec<bool>> = verdicts
        .iter()
        .map(|(_, a)| verdicts.iter().map(|(_, b)| a.verdict == b.verdict).collect())
        .collect();
    report.info(
        "agreement",
        json!({
            "columns": verdicts.iter().map(|(n, _)| *n).collect::<Vec<_>>(),
            "verdicts": verdicts.iter().map(|(_, c)| c.verdict).collect::<Vec<_>>(),
            "agree": matrix,
        }),
    );
    let decided = quotient.certified && absorbed.certified;
    let consistent = quotient.verdict == absorbed.verdict && (!quotient.verdict || weak.verdict);
    if decided {
        report.check("quotient_iff_ideally_absorbed", consistent, json!(null));
    } else {
        report.push("quotient_iff_ideally_absorbed", Status::Unverified, None, json!(null));
    }
    let mut outcome = Outcome::from_report(report);
    if quotient.is_certified_false() {
        outcome.exit = Exit::Violation;
    }
    Ok(outcome)
}

/// Parses `all`, `section N` or `N`.
pub fn parse_suite(words: &[String]) -> Result<Selection, Failure> {
    let bad = || Failure::input(format!("unknown suite {:?}; use `all` or `section N`", words.join(" ")));
    match words {
        [] => Ok(Selection::All),
        [w] if w == "all" => Ok(Selection::All),
        [w] => w.parse().map(Selection::Section).map_err(|_| bad()),
        [s, n] if s == "section" => n.parse().map(Selection::Section).map_err(|_| bad()),
        _ => Err(bad()),
    }
}

/// Runs the property suites and records one result per suite.
pub fn cmd_replicate(selection: Selection, seed: u64) -> CmdResult {
    let outcomes = replicate::run(selection, seed)?;
    let command = match selection {
        Selection::All => "replicate all".to_string(),
        Selection::Section(n) => format!("replicate section {n}"),
    };
    let mut report = Report::new(command, seed);
    for o in outcomes {
        let status = if !o.passed() {
            Status::Fail
        } else if o.unverified > 0 {
            Status::Unverified
        } else {
            Status::Pass
        };
        report.push(
            o.suite,
            status,
            None,
            json!({
                "section": o.section,
                "cases": o.cases,
                "failures": o.failures,
                "unverified": o.unverified,
                "messages": o.messages,
            }),
        );
    }
    Ok(Outcome::from_report(report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use leibquot_core::leibniz::catalog;
    use leibquot_core::Field;

    #[test]
    fn suites_parse() {
        let w = |s: &str| s.split_whitespace().map(String::from).collect::<Vec<_>>();
        assert_eq!(parse_suite(&w("all")).unwrap(), Selection::All);
        assert_eq!(parse_suite(&w("section 3")).unwrap(), Selection::Section(3));
        assert_eq!(parse_suite(&w("5")).unwrap(), Selection::Section(5));
        assert_eq!(parse_suite(&w("chapter 2")).unwrap_err().exit, Exit::Input);
    }

    #[test]
    fn inline_subalgebra_arguments() {
        let q = catalog::sl2(Field::Rational);
        let v = parse_subalgebra("1,0,0; 0,0,1/2", &q).unwrap();
        assert_eq!(v.len(), 2);
        assert_eq!(v[1][2], Field::Rational.parse("1/2").unwrap());
        assert_eq!(parse_subalgebra("1,0", &q).unwrap_err().exit, Exit::Input);
        assert_eq!(parse_subalgebra("1,x,0", &q).unwrap_err().exit, Exit::Input);
    }

    #[test]
    fn sidecar_sits_next_to_the_output() {
        assert_eq!(phi_path(Path::new("/tmp/qm.json")), PathBuf::from("/tmp/qm.phi.json"));
    }

    #[test]
    fn errors_map_to_exit_codes() {
        assert_eq!(Failure::from(Error::OracleUnavailable(Field::Rational)).exit, Exit::Unavailable);
        assert_eq!(Failure::from(Error::NotSemiprime("L2".into())).exit, Exit::Violation);
        assert_eq!(Failure::from(Error::Parse("x".into())).exit, Exit::Input);
    }
}
