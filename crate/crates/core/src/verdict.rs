//! Pass/fail results that carry their own evidence.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::rational::Rational;

/// One side of a failed comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Side {
    Element(String),
    Natural(usize),
    Rational(#[serde(serialize_with = "crate::rational::serialize")] Rational),
    Indices(Vec<usize>),
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Element(e) => f.write_str(e),
            Side::Natural(n) => write!(f, "{n}"),
            Side::Rational(r) => write!(f, "{r}"),
            Side::Indices(ix) => {
                f.write_str("{")?;
                for (i, x) in ix.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str("}")
            }
        }
    }
}

/// The point at which a checked condition fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Short name of the violated condition, e.g. `ad-hypothesis`.
    pub condition: String,
    /// Labelled elements, e.g. `[("x", "a"), ("y", "b")]`.
    pub at: Vec<(String, String)>,
    /// Coefficient index, for polynomial conditions.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    pub lhs: Side,
    pub rhs: Side,
}

impl Witness {
    pub fn new(condition: &str, at: &[(&str, &str)], lhs: Side, rhs: Side) -> Self {
        Witness {
            condition: condition.to_string(),
            at: at
                .iter()
                .map(|(l, v)| (l.to_string(), v.to_string()))
                .collect(),
            index: None,
            lhs,
            rhs,
        }
    }

    pub fn at_index(condition: &str, index: usize, lhs: Side, rhs: Side) -> Self {
        Witness {
            condition: condition.to_string(),
            at: Vec::new(),
            index: Some(index),
            lhs,
            rhs,
        }
    }

    /// Value of the labelled element, if present.
    pub fn element(&self, label: &str) -> Option<&str> {
        self.at
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, v)| v.as_str())
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (label, value) in &self.at {
            write!(f, "{label}={value} ")?;
        }
        if let Some(k) = self.index {
            write!(f, "k={k} ")?;
        }
        write!(f, "lhs={} rhs={}", self.lhs, self.rhs)
    }
}

/// Outcome of a check. The condition holds exactly when there is no witness.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Verdict {
    witness: Option<Witness>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict { witness: None }
    }

    pub fn fail(witness: Witness) -> Self {
        Verdict {
            witness: Some(witness),
        }
    }

    pub fn from_witness(witness: Option<Witness>) -> Self {
        Verdict { witness }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }

    pub fn into_witness(self) -> Option<Witness> {
        self.witness
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Verdict", 2)?;
        st.serialize_field("holds", &self.holds())?;
        st.serialize_field("witness", &self.witness)?;
        st.end()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => f.write_str("holds"),
            Some(w) => write!(f, "FAILS [{}] {w}", w.condition),
        }
    }
}
