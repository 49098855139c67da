use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VerdictKind {
    /// Refined invariants vanish for every spin^c structure.
    Vanishes,
    /// Some spin^c structure has nonvanishing refined invariant.
    Nonvanishing,
    Unknown,
    /// The descriptor describes no manifold at all.
    Inconsistent,
}

/// Every rule the engine knows, each tied to the statement it encodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    V1,
    V2,
    V3,
    V4,
    #[serde(rename = "V1'")]
    V1Minus2,
    #[serde(rename = "V2'")]
    V2Minus2,
    #[serde(rename = "V3'")]
    V3Minus2,
    #[serde(rename = "V4'")]
    V4Minus2,
    N0,
    N1,
    N2,
    N3,
    Unit,
    Declared,
    KOrientationBound,
    MorganSzabo,
    StatusConsistency,
    NoRule,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::V1 => "V1",
            Rule::V2 => "V2",
            Rule::V3 => "V3",
            Rule::V4 => "V4",
            Rule::V1Minus2 => "V1'",
            Rule::V2Minus2 => "V2'",
            Rule::V3Minus2 => "V3'",
            Rule::V4Minus2 => "V4'",
            Rule::N0 => "N0",
            Rule::N1 => "N1",
            Rule::N2 => "N2",
            Rule::N3 => "N3",
            Rule::Unit => "UNIT",
            Rule::Declared => "DECLARED",
            Rule::KOrientationBound => "KOB",
            Rule::MorganSzabo => "MS",
            Rule::StatusConsistency => "STATUS",
            Rule::NoRule => "NONE",
        }
    }

    pub fn citation(self) -> &'static str {
        match self {
            Rule::V1 => "vanishing thm, item 1",
            Rule::V2 => "vanishing thm, item 2",
            Rule::V3 => "vanishing thm, item 3",
            Rule::V4 => "vanishing thm, item 4",
            Rule::V1Minus2 => "-2-sum vanishing thm, item 1",
            Rule::V2Minus2 => "-2-sum vanishing thm, item 2",
            Rule::V3Minus2 => "-2-sum vanishing thm, item 3",
            Rule::V4Minus2 => "-2-sum vanishing thm, item 4",
            Rule::N0 => "almost complex: refined invariant detected by the SW integer",
            Rule::N1 => "non-vanishing thm, item 1",
            Rule::N2 => "non-vanishing thm, item 2",
            Rule::N3 => "non-vanishing thm, item 3",
            Rule::Unit => "unit: monopole map is the identity on the sphere spectrum",
            Rule::Declared => "declared status of the single summand",
            Rule::KOrientationBound => "K-orientation bound: c1^2 <= sign when b+ = 0",
            Rule::MorganSzabo => {
                "Morgan-Szabo: symplectic, b1 = 0, trivial canonical class forces sign = -16"
            }
            Rule::StatusConsistency => "declared status contradicts the descriptor",
            Rule::NoRule => "no encoded rule applies",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.citation())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub rule: Rule,
    /// Extra detail, e.g. why a descriptor is inconsistent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Verdict {
    pub fn new(kind: VerdictKind, rule: Rule) -> Self {
        Self {
            kind,
            rule,
            note: None,
        }
    }

    pub fn unknown() -> Self {
        Self::new(VerdictKind::Unknown, Rule::NoRule)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn is_inconsistent(&self) -> bool {
        self.kind == VerdictKind::Inconsistent
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            VerdictKind::Unknown => f.write_str("Unknown")?,
            kind => write!(f, "{kind:?} ({})", self.rule.citation())?,
        }
        if let Some(note) = &self.note {
            write!(f, ": {note}")?;
        }
        Ok(())
    }
}
