//! JSON descriptor files: named manifolds plus named sum expressions.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::engine::{Factor, FactorStatus, Junction, MonopoleClassDescriptor, Summand};
use super::{FourManifold, Library, SpinCStructure};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("missing format_version")]
    MissingVersion,
    #[error("unsupported format_version {0:?} (expected {FORMAT_VERSION:?})")]
    UnsupportedVersion(String),
    #[error("unknown manifold {0:?}")]
    UnknownName(String),
    #[error("manifold {0:?} declared twice")]
    DuplicateName(String),
    #[error("expression {0:?} declared twice")]
    DuplicateExpression(String),
    #[error("no expression named {0:?}")]
    UnknownExpression(String),
    #[error("{manifold} has no spin^c structure #{index}")]
    MissingSpinc { manifold: String, index: usize },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

/// A manifold entry: the descriptor plus the declared status of its refined
/// invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifoldRecord {
    #[serde(flatten)]
    pub manifold: FourManifold,
    #[serde(default, skip_serializing_if = "is_unknown")]
    pub status: FactorStatus,
}

fn is_unknown(s: &FactorStatus) -> bool {
    *s == FactorStatus::Unknown
}

/// A sum expression over named manifolds.
///
/// `"K3"`, `{"connected": [..]}`, `{"minus_two": [a, b]}`, or
/// `{"manifold": "K3", "spinc": 1}` to pick a spin^c structure other than the
/// first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SumExpr {
    Name(String),
    Connected { connected: Vec<SumExpr> },
    MinusTwo { minus_two: Box<[SumExpr; 2]> },
    Ref { manifold: String, spinc: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedExpr {
    pub name: String,
    pub expr: SumExpr,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescriptorFile {
    pub format_version: String,
    #[serde(default)]
    pub manifolds: Vec<ManifoldRecord>,
    #[serde(default)]
    pub expressions: Vec<NamedExpr>,
}

impl DescriptorFile {
    /// Parses a file, checking the version before anything else.
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
        match value.get("format_version") {
            None => return Err(FormatError::MissingVersion),
            Some(serde_json::Value::String(v)) if v == FORMAT_VERSION => {}
            Some(other) => {
                let shown = other
                    .as_str()
                    .map_or_else(|| other.to_string(), str::to_string);
                return Err(FormatError::UnsupportedVersion(shown));
            }
        }
        let file: Self =
            serde_json::from_value(value).map_err(|e| FormatError::Json(e.to_string()))?;
        file.check_unique()?;
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("descriptor files serialize")
    }

    fn check_unique(&self) -> Result<(), FormatError> {
        let mut seen = BTreeSet::new();
        for r in &self.manifolds {
            if !seen.insert(r.manifold.name.as_str()) {
                return Err(FormatError::DuplicateName(r.manifold.name.clone()));
            }
        }
        let mut seen = BTreeSet::new();
        for e in &self.expressions {
            if !seen.insert(e.name.as_str()) {
                return Err(FormatError::DuplicateExpression(e.name.clone()));
            }
        }
        Ok(())
    }

    /// File entries shadow library entries of the same name.
    pub fn lookup<'a>(&'a self, name: &str, library: &'a Library) -> Option<&'a ManifoldRecord> {
        self.manifolds
            .iter()
            .find(|r| r.manifold.name == name)
            .or_else(|| library.get(name))
    }

    /// Checks that every name used by every expression resolves.
    pub fn check_names(&self, library: &Library) -> Result<(), FormatError> {
        self.expressions
            .iter()
            .try_for_each(|e| self.build(&e.expr, library).map(drop))
    }

    pub fn expression(&self, name: &str) -> Result<&SumExpr, FormatError> {
        self.expressions
            .iter()
            .find(|e| e.name == name)
            .map(|e| &e.expr)
            .ok_or_else(|| FormatError::UnknownExpression(name.to_string()))
    }

    /// Builds the monopole-class descriptor of an expression. Unit factors
    /// are kept so that the underlying manifold can still be recovered.
    pub fn build(
        &self,
        expr: &SumExpr,
        library: &Library,
    ) -> Result<MonopoleClassDescriptor, FormatError> {
        match expr {
            SumExpr::Name(name) => self
                .factor(name, 0, library)
                .map(MonopoleClassDescriptor::single),
            SumExpr::Ref { manifold, spinc } => self
                .factor(manifold, *spinc, library)
                .map(MonopoleClassDescriptor::single),
            SumExpr::Connected { connected } => {
                let mut summands = Vec::new();
                for e in connected {
                    let d = self.build(e, library)?;
                    match d.junction {
                        Junction::Connected => summands.extend(d.summands),
                        Junction::AlongMinusTwo => summands.push(Summand::Nested(d)),
                    }
                }
                Ok(MonopoleClassDescriptor {
                    junction: Junction::Connected,
                    summands,
                })
            }
            SumExpr::MinusTwo { minus_two } => {
                let [a, b] = minus_two.as_ref();
                let side = |e: &SumExpr| -> Result<Summand, FormatError> {
                    let mut d = self.build(e, library)?;
                    Ok(if d.summands.len() == 1 {
                        d.summands.pop().expect("one summand")
                    } else {
                        Summand::Nested(d)
                    })
                };
                Ok(MonopoleClassDescriptor {
                    junction: Junction::AlongMinusTwo,
                    summands: vec![side(a)?, side(b)?],
                })
            }
        }
    }

    fn factor(&self, name: &str, index: usize, library: &Library) -> Result<Factor, FormatError> {
        let record = self
            .lookup(name, library)
            .ok_or_else(|| FormatError::UnknownName(name.to_string()))?;
        let m = &record.manifold;
        let spinc = match m.spinc_list.get(index) {
            Some(s) => s.clone(),
            None if index == 0 && m.spinc_list.is_empty() => {
                SpinCStructure::with_c1_squared(m.sign())
            }
            None => {
                return Err(FormatError::MissingSpinc {
                    manifold: name.to_string(),
                    index,
                })
            }
        };
        Ok(Factor::new(m.clone(), spinc, record.status.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"{
        "format_version": "1",
        "manifolds": [
            {"name": "X", "b1": 0, "b_plus": 3, "b_minus": 19, "flags": ["Symplectic"],
             "spinc": [{"c1_squared": 0}], "status": {"almost_complex_sw": 1}}
        ],
        "expressions": [
            {"name": "pair", "expr": {"connected": ["X", "K3"]}},
            {"name": "glued", "expr": {"minus_two": ["K3", {"manifold": "K3", "spinc": 0}]}}
        ]
    }"#;

    #[test]
    fn parses_and_builds() {
        let lib = Library::bundled();
        let f = DescriptorFile::parse(SAMPLE).unwrap();
        f.check_names(&lib).unwrap();
        let d = f.build(f.expression("pair").unwrap(), &lib).unwrap();
        assert_eq!(d.summands.len(), 2);
        assert_eq!(
            d.factors().next().unwrap().status,
            FactorStatus::AlmostComplexSw(1)
        );
        let g = f.build(f.expression("glued").unwrap(), &lib).unwrap();
        assert_eq!(g.junction, Junction::AlongMinusTwo);
    }

    #[test]
    fn version_checked_first() {
        assert_eq!(
            DescriptorFile::parse(r#"{"format_version": "2", "manifolds": 7}"#),
            Err(FormatError::UnsupportedVersion("2".into()))
        );
        assert_eq!(
            DescriptorFile::parse("{}"),
            Err(FormatError::MissingVersion)
        );
        assert!(matches!(
            DescriptorFile::parse("{"),
            Err(FormatError::Json(_))
        ));
    }

    #[test]
    fn names_must_resolve() {
        let lib = Library::bundled();
        let text = r#"{"format_version": "1", "expressions": [{"name": "e", "expr": {"connected": ["K3", "Y"]}}]}"#;
        let f = DescriptorFile::parse(text).unwrap();
        assert_eq!(
            f.check_names(&lib),
            Err(FormatError::UnknownName("Y".into()))
        );
        let text = r#"{"format_version": "1", "expressions": [{"name": "e", "expr": {"manifold": "K3", "spinc": 9}}]}"#;
        let f = DescriptorFile::parse(text).unwrap();
        assert!(matches!(
            f.check_names(&lib),
            Err(FormatError::MissingSpinc { index: 9, .. })
        ));
    }

    #[test]
    fn duplicates_rejected() {
        let text = r#"{"format_version": "1", "manifolds": [
            {"name": "A", "b1": 0, "b_plus": 0, "b_minus": 1},
            {"name": "A", "b1": 0, "b_plus": 0, "b_minus": 2}]}"#;
        assert_eq!(
            DescriptorFile::parse(text),
            Err(FormatError::DuplicateName("A".into()))
        );
    }

    #[test]
    fn round_trip() {
        let f = DescriptorFile::parse(SAMPLE).unwrap();
        assert_eq!(DescriptorFile::parse(&f.to_json()).unwrap(), f);
    }
}
