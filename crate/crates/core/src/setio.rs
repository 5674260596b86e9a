//! Finite bifuzzy sets over labeled universes, with CSV and JSON persistence.
//!
//! CSV layout, LF line endings, no quoting:
//!
//! ```text
//! label,mu,nu
//! a,1,0
//! b,0.7,0.2
//! ```
//!
//! JSON layout:
//!
//! ```text
//! {"name": "A", "elements": {"a": {"mu": 1, "nu": 0}}}
//! ```
//!
//! Labels are non-empty and drawn from `[A-Za-z0-9_.-]`. Elements are kept
//! in byte-lexicographic label order, which fixes serialization output and
//! the summation order of every aggregate.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Read;
use std::path::Path;

use serde::de::{MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize};
use thiserror::Error;

use crate::bifuzzy::BifuzzyValue;

pub const CSV_HEADER: &str = "label,mu,nu";

#[derive(Debug, Error)]
pub enum SetError {
    #[error("invalid label `{label}`{}: labels must be non-empty and use only A-Z a-z 0-9 _ . -", at_line(*.line))]
    InvalidLabel { label: String, line: Option<u64> },
    #[error("duplicate label `{label}`{}", at_line(*.line))]
    DuplicateLabel { label: String, line: Option<u64> },
    #[error("{field} out of range, line {line}")]
    OutOfRange { field: &'static str, line: u64 },
    #[error("{field} out of range for element `{label}`")]
    OutOfRangeLabel { field: &'static str, label: String },
    #[error("malformed number `{text}` for {field}, line {line}")]
    MalformedNumber {
        field: &'static str,
        text: String,
        line: u64,
    },
    #[error("missing header: expected `{CSV_HEADER}`")]
    MissingHeader,
    #[error("bad header `{found}`: expected `{CSV_HEADER}`")]
    BadHeader { found: String },
    #[error("expected 3 fields, found {found}, line {line}")]
    FieldCount { found: usize, line: u64 },
    #[error("invalid JSON set: {0}")]
    Json(#[from] serde_json::Error),
    #[error("CSV read error: {0}")]
    Csv(#[from] csv::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

fn at_line(line: Option<u64>) -> String {
    line.map(|l| format!(", line {l}")).unwrap_or_default()
}

pub fn is_valid_label(label: &str) -> bool {
    !label.is_empty()
        && label
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || matches!(b, b'_' | b'.' | b'-'))
}

/// A named finite set of labeled bifuzzy values.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct BifuzzySet {
    name: String,
    elements: BTreeMap<String, BifuzzyValue>,
}

impl BifuzzySet {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            elements: BTreeMap::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn insert(&mut self, label: impl Into<String>, value: BifuzzyValue) -> Result<(), SetError> {
        self.insert_at(label.into(), value, None)
    }

    fn insert_at(
        &mut self,
        label: String,
        value: BifuzzyValue,
        line: Option<u64>,
    ) -> Result<(), SetError> {
        if !is_valid_label(&label) {
            return Err(SetError::InvalidLabel { label, line });
        }
        if self.elements.contains_key(&label) {
            return Err(SetError::DuplicateLabel { label, line });
        }
        self.elements.insert(label, value);
        Ok(())
    }

    pub fn get(&self, label: &str) -> Option<BifuzzyValue> {
        self.elements.get(label).copied()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.elements.contains_key(label)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in canonical label order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, BifuzzyValue)> + '_ {
        self.elements.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> + '_ {
        self.elements.keys().map(String::as_str)
    }

    pub fn values(&self) -> impl Iterator<Item = BifuzzyValue> + '_ {
        self.elements.values().copied()
    }

    /// Parses the CSV layout. Row order is irrelevant.
    pub fn from_csv<R: Read>(name: impl Into<String>, reader: R) -> Result<Self, SetError> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .trim(csv::Trim::All)
            .from_reader(reader);
        let mut records = rdr.records();
        let header = match records.next() {
            None => return Err(SetError::MissingHeader),
            Some(r) => r?,
        };
        if header.iter().collect::<Vec<_>>() != ["label", "mu", "nu"] {
            let found = header.iter().collect::<Vec<_>>().join(",");
            return Err(if header.iter().any(|f| f == "label") {
                SetError::BadHeader { found }
            } else {
                SetError::MissingHeader
            });
        }
        let mut set = BifuzzySet::new(name);
        for record in records {
            let record = record?;
            let line = record.position().map_or(0, |p| p.line());
            if record.len() != 3 {
                return Err(SetError::FieldCount {
                    found: record.len(),
                    line,
                });
            }
            let mu = parse_degree("mu", &record[1], line)?;
            let nu = parse_degree("nu", &record[2], line)?;
            let value = BifuzzyValue::new(mu, nu).expect("range checked");
            set.insert_at(record[0].to_owned(), value, Some(line))?;
        }
        Ok(set)
    }

    pub fn from_csv_str(name: impl Into<String>, text: &str) -> Result<Self, SetError> {
        Self::from_csv(name, text.as_bytes())
    }

    /// Header then one row per element, numbers in shortest round-trip form.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(16 * (self.len() + 1));
        out.push_str(CSV_HEADER);
        out.push('\n');
        for (label, v) in self.iter() {
            out.push_str(&format!("{label},{},{}\n", v.mu(), v.nu()));
        }
        out
    }

    pub fn from_json_str(text: &str) -> Result<Self, SetError> {
        let raw: RawSet = serde_json::from_str(text)?;
        let mut set = BifuzzySet::new(raw.name);
        for (label, value) in raw.elements.0 {
            let build = BifuzzyValue::new(value.mu, value.nu).map_err(|_| {
                let field = if (0.0..=1.0).contains(&value.mu) { "nu" } else { "mu" };
                SetError::OutOfRangeLabel {
                    field,
                    label: label.clone(),
                }
            })?;
            set.insert(label, build)?;
        }
        Ok(set)
    }

    pub fn from_json<R: Read>(mut reader: R) -> Result<Self, SetError> {
        let mut text = String::new();
        reader.read_to_string(&mut text).map_err(|source| SetError::Io {
            path: "<reader>".to_owned(),
            source,
        })?;
        Self::from_json_str(&text)
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct View<'a> {
            name: &'a str,
            elements: &'a BTreeMap<String, BifuzzyValue>,
        }
        let mut out = serde_json::to_string_pretty(&View {
            name: &self.name,
            elements: &self.elements,
        })
        .expect("finite floats serialize");
        out.push('\n');
        out
    }

    /// Loads a file, as JSON when the extension is `.json` and as CSV
    /// otherwise. CSV sets are named after the file stem.
    pub fn load(path: &Path) -> Result<Self, SetError> {
        let text = std::fs::read_to_string(path).map_err(|source| SetError::Io {
            path: path.display().to_string(),
            source,
        })?;
        if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json")) {
            Self::from_json_str(&text)
        } else {
            let name = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            Self::from_csv_str(name, &text)
        }
    }
}

fn parse_degree(field: &'static str, text: &str, line: u64) -> Result<f64, SetError> {
    let value: f64 = text.parse().map_err(|_| SetError::MalformedNumber {
        field,
        text: text.to_owned(),
        line,
    })?;
    if value.is_nan() {
        return Err(SetError::MalformedNumber {
            field,
            text: text.to_owned(),
            line,
        });
    }
    if !(0.0..=1.0).contains(&value) {
        return Err(SetError::OutOfRange { field, line });
    }
    Ok(value)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSet {
    name: String,
    elements: RawElements,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawValue {
    mu: f64,
    nu: f64,
}

/// Element map that rejects repeated keys instead of keeping the last one.
struct RawElements(Vec<(String, RawValue)>);

impl<'de> Deserialize<'de> for RawElements {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ElementsVisitor;

        impl<'de> Visitor<'de> for ElementsVisitor {
            type Value = RawElements;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from element label to {\"mu\": number, \"nu\": number}")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<RawElements, A::Error> {
                let mut seen = std::collections::BTreeSet::new();
                let mut out = Vec::new();
                while let Some((label, value)) = map.next_entry::<String, RawValue>()? {
                    if !seen.insert(label.clone()) {
                        return Err(serde::de::Error::custom(format!(
                            "duplicate label `{label}`"
                        )));
                    }
                    out.push((label, value));
                }
                Ok(RawElements(out))
            }
        }

        deserializer.deserialize_map(ElementsVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(mu: f64, nu: f64) -> BifuzzyValue {
        BifuzzyValue::new(mu, nu).unwrap()
    }

    #[test]
    fn csv_single_row() {
        let s = BifuzzySet::from_csv_str("A", "label,mu,nu\na,1,0\n").unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.get("a"), Some(v(1.0, 0.0)));
    }

    #[test]
    fn csv_row_order_is_irrelevant() {
        let a = BifuzzySet::from_csv_str("A", "label,mu,nu\nb,0.7,0.2\na,1,0\n").unwrap();
        let b = BifuzzySet::from_csv_str("A", "label,mu,nu\na,1,0\nb,0.7,0.2\n").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.get("b"), Some(v(0.7, 0.2)));
        assert_eq!(a.to_csv(), "label,mu,nu\na,1,0\nb,0.7,0.2\n");
    }

    #[test]
    fn csv_errors_carry_line_numbers() {
        let err = BifuzzySet::from_csv_str("A", "label,mu,nu\nc,1.2,0\n").unwrap_err();
        assert_eq!(err.to_string(), "mu out of range, line 2");
        let err = BifuzzySet::from_csv_str("A", "label,mu,nu\na,0,0\nb,0,x\n").unwrap_err();
        assert_eq!(err.to_string(), "malformed number `x` for nu, line 3");
        let err = BifuzzySet::from_csv_str("A", "label,mu,nu\na,0,0\na,1,1\n").unwrap_err();
        assert_eq!(err.to_string(), "duplicate label `a`, line 3");
        let err = BifuzzySet::from_csv_str("A", "a,0,0\n").unwrap_err();
        assert!(matches!(err, SetError::MissingHeader));
        assert!(matches!(
            BifuzzySet::from_csv_str("A", "").unwrap_err(),
            SetError::MissingHeader
        ));
        let err = BifuzzySet::from_csv_str("A", "label,mu,nu\na,0\n").unwrap_err();
        assert_eq!(err.to_string(), "expected 3 fields, found 2, line 2");
        let err = BifuzzySet::from_csv_str("A", "label,mu,nu\na b,0,0\n").unwrap_err();
        assert!(matches!(err, SetError::InvalidLabel { line: Some(2), .. }));
        let err = BifuzzySet::from_csv_str("A", "label,mu,nu\na,NaN,0\n").unwrap_err();
        assert!(matches!(err, SetError::MalformedNumber { .. }));
    }

    #[test]
    fn csv_empty_set() {
        let s = BifuzzySet::new("e");
        assert_eq!(s.to_csv(), "label,mu,nu\n");
        assert_eq!(BifuzzySet::from_csv_str("e", &s.to_csv()).unwrap(), s);
    }

    #[test]
    fn csv_center_value() {
        let mut s = BifuzzySet::new("x");
        s.insert("x", v(0.5, 0.5)).unwrap();
        assert_eq!(s.to_csv(), "label,mu,nu\nx,0.5,0.5\n");
    }

    #[test]
    fn json_examples() {
        let s = BifuzzySet::from_json_str(r#"{"name":"A","elements":{}}"#).unwrap();
        assert_eq!(s.name(), "A");
        assert!(s.is_empty());
        let s = BifuzzySet::from_json_str(r#"{"name":"B","elements":{"x":{"mu":0.3,"nu":0.2}}}"#)
            .unwrap();
        let c = s.get("x").unwrap().classify();
        assert_eq!(c.kind, crate::Kind::Intuitionistic);
        assert!((c.index - 0.5).abs() < 1e-12);
    }

    #[test]
    fn json_errors() {
        let dup = r#"{"name":"A","elements":{"a":{"mu":0,"nu":0},"a":{"mu":1,"nu":1}}}"#;
        assert!(BifuzzySet::from_json_str(dup)
            .unwrap_err()
            .to_string()
            .contains("duplicate label `a`"));
        let range = r#"{"name":"A","elements":{"a":{"mu":0,"nu":2}}}"#;
        assert_eq!(
            BifuzzySet::from_json_str(range).unwrap_err().to_string(),
            "nu out of range for element `a`"
        );
        for bad in [
            r#"{"elements":{}}"#,
            r#"{"name":"A"}"#,
            r#"{"name":1,"elements":{}}"#,
            r#"{"name":"A","elements":{"a":{"mu":"0","nu":0}}}"#,
            r#"{"name":"A","elements":{"a":{"mu":0}}}"#,
            r#"{"name":"A","elements":[]}"#,
        ] {
            assert!(
                matches!(BifuzzySet::from_json_str(bad), Err(SetError::Json(_))),
                "{bad}"
            );
        }
        let label = r#"{"name":"A","elements":{"a,b":{"mu":0,"nu":0}}}"#;
        assert!(matches!(
            BifuzzySet::from_json_str(label),
            Err(SetError::InvalidLabel { .. })
        ));
    }

    #[test]
    fn json_round_trip_is_byte_stable() {
        let mut s = BifuzzySet::new("demo");
        s.insert("b", v(0.7, 0.2)).unwrap();
        s.insert("a", v(1.0, 0.0)).unwrap();
        s.insert("c", v(0.1 + 0.2, 1e-7)).unwrap();
        let text = s.to_json();
        let back = BifuzzySet::from_json_str(&text).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn labels() {
        assert!(is_valid_label("a_b.c-9"));
        assert!(!is_valid_label(""));
        assert!(!is_valid_label("a b"));
        assert!(!is_valid_label("é"));
        let mut s = BifuzzySet::new("x");
        assert!(s.insert("", v(0.0, 0.0)).is_err());
    }
}
