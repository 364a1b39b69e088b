use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::leibniz::LeibnizAlgebra;
use crate::linalg::Matrix;
use crate::scalar::{Field, Scalar};

/// One structure constant `c[i][j][k]`, the coefficient of `b_k` in `[b_i, b_j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry(pub usize, pub usize, pub usize, pub String);

/// The on-disk description of an algebra.
///
/// ```json
/// {"name": "L2", "field": "rational", "dim": 2, "brackets": [[0, 0, 1, "1"]]}
/// ```
///
/// `field` is `"rational"` or `{"prime": p}`. Coefficients are strings
/// holding an integer or a fraction `a/b`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub field: Field,
    pub dim: usize,
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub expected: BTreeMap<String, Value>,
}

fn text<T: Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string(v).expect("file parts always serialize")
}

fn at(location: String, message: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{location}: {message}"))
}

impl AlgebraFile {
    /// Parses and validates JSON text. Syntax errors report line and column,
    /// semantic errors report the offending field.
    pub fn from_json(text: &str) -> Result<AlgebraFile> {
        let file: AlgebraFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;
        file.validate()?;
        Ok(file)
    }

    /// Checks the field, index bounds, coefficient syntax and duplicate entries.
    pub fn validate(&self) -> Result<()> {
        if let Field::Prime(p) = self.field {
            Field::prime(p).map_err(|e| at("field".into(), e))?;
        }
        let mut seen = BTreeSet::new();
        for (n, BracketEntry(i, j, k, c)) in self.brackets.iter().enumerate() {
            for (slot, idx) in [*i, *j, *k].into_iter().enumerate() {
                if idx >= self.dim {
                    return Err(at(
                        format!("brackets[{n}][{slot}]"),
                        format!("index {idx} out of range for dim {}", self.dim),
                    ));
                }
            }
            self.field.parse(c).map_err(|e| at(format!("brackets[{n}][3]"), e))?;
            if !seen.insert((*i, *j, *k)) {
                return Err(at(format!("brackets[{n}]"), format!("duplicate entry ({i}, {j}, {k})")));
            }
        }
        Ok(())
    }

    /// Pretty JSON with one bracket entry per line.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        out.push_str(&format!("  \"name\": {},\n", text(&self.name)));
        out.push_str(&format!("  \"field\": {},\n", text(&self.field)));
        out.push_str(&format!("  \"dim\": {},\n", self.dim));
        if self.brackets.is_empty() {
            out.push_str("  \"brackets\": []");
        } else {
            let rows: Vec<String> = self.brackets.iter().map(|b| format!("    {}", text(b))).collect();
            out.push_str(&format!("  \"brackets\": [\n{}\n  ]", rows.join(",\n")));
        }
        if !self.expected.is_empty() {
            let rows: Vec<String> = self
                .expected
                .iter()
                .map(|(k, v)| format!("    {}: {}", text(k), v))
                .collect();
            out.push_str(&format!(",\n  \"expected\": {{\n{}\n  }}", rows.join(",\n")));
        }
        out.push_str("\n}");
        out
    }

    /// Builds the algebra; identities are evaluated but not enforced.
    pub fn to_algebra(&self) -> Result<LeibnizAlgebra> {
        self.validate()?;
        let mut entries = Vec::with_capacity(self.brackets.len());
        for BracketEntry(i, j, k, c) in &self.brackets {
            entries.push((*i, *j, *k, self.field.parse(c)?));
        }
        LeibnizAlgebra::from_entries(self.name.clone(), self.field, self.dim, entries)
    }

    /// The canonical file of an algebra: nonzero entries in `(i, j, k)` order.
    pub fn from_algebra(alg: &LeibnizAlgebra) -> AlgebraFile {
        AlgebraFile {
            name: alg.name().to_string(),
            field: alg.field(),
            dim: alg.dim(),
            brackets: alg
                .entries()
                .into_iter()
                .map(|(i, j, k, c)| BracketEntry(i, j, k, c.to_string()))
                .collect(),
            expected: BTreeMap::new(),
        }
    }

    pub fn with_expected(mut self, key: impl Into<String>, value: impl Into<Value>) -> Self {
        self.expected.insert(key.into(), value.into());
        self
    }

    pub fn expected_bool(&self, key: &str) -> Option<bool> {
        self.expected.get(key).and_then(Value::as_bool)
    }

    pub fn expected_usize(&self, key: &str) -> Option<usize> {
        self.expected.get(key).and_then(Value::as_u64).map(|v| v as usize)
    }
}

/// A matrix written with string entries, used for `φ` and other maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub name: String,
    pub field: Field,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixFile {
    pub fn from_matrix(name: impl Into<String>, m: &Matrix) -> MatrixFile {
        MatrixFile {
            name: name.into(),
            field: m.field(),
            rows: m.rows(),
            cols: m.cols(),
            entries: m
                .row_vectors()
                .iter()
                .map(|r| r.iter().map(Scalar::to_string).collect())
                .collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<MatrixFile> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("matrix files always serialize")
    }

    pub fn to_matrix(&self) -> Result<Matrix> {
        if self.entries.len() != self.rows {
            return Err(at("entries".into(), format!("expected {} rows, found {}", self.rows, self.entries.len())));
        }
        let mut rows = Vec::with_capacity(self.rows);
        for (r, row) in self.entries.iter().enumerate() {
            if row.len() != self.cols {
                return Err(at(format!("entries[{r}]"), format!("expected {} columns, found {}", self.cols, row.len())));
            }
            let parsed = row
                .iter()
                .enumerate()
                .map(|(c, s)| self.field.parse(s).map_err(|e| at(format!("entries[{r}][{c}]"), e)))
                .collect::<Result<Vec<_>>>()?;
            rows.push(parsed);
        }
        Matrix::from_rows(self.field, self.cols, rows)
    }
}
