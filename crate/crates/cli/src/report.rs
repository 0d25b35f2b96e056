use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;

use crate::inputs::Recorded;
use qfkg_core::{FamilySelection, Lattice, QPolynomial, Verdict};

/// Human-readable lines plus the JSON payload of one check.
pub struct Checked {
    pub holds: bool,
    pub lines: Vec<String>,
    pub result: serde_json::Value,
}

impl Checked {
    pub fn new(kind: &str, verdict: &Verdict, result: impl Serialize) -> Result<Self> {
        let mut lines = vec![headline(kind, verdict.holds())];
        if let Some(w) = verdict.witness() {
            lines.push(format!("witness: {w}"));
        }
        Ok(Checked {
            holds: verdict.holds(),
            lines,
            result: serde_json::to_value(result)?,
        })
    }

    pub fn line(&mut self, s: impl Into<String>) -> &mut Self {
        self.lines.push(s.into());
        self
    }
}

pub fn headline(kind: &str, holds: bool) -> String {
    format!("{kind}: {}", if holds { "holds" } else { "FAILS" })
}

#[derive(Serialize)]
struct Report<'a> {
    command: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    kind: Option<&'a str>,
    inputs: &'a Recorded,
    holds: bool,
    result: &'a serde_json::Value,
}

pub fn write_report(
    path: &Path,
    command: &str,
    kind: Option<&str>,
    inputs: &Recorded,
    checked: &Checked,
) -> Result<()> {
    let report = Report {
        command,
        kind,
        inputs,
        holds: checked.holds,
        result: &checked.result,
    };
    write_json(path, &report)
}

pub fn write_json(path: &Path, value: &impl Serialize) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text).with_context(|| format!("{}: cannot write", path.display()))
}

pub fn family(l: &Lattice, s: &FamilySelection) -> String {
    if s.is_empty() {
        "(empty)".into()
    } else {
        s.names(l).join(" ")
    }
}

/// `LABEL: 0 1 2` followed by `LABEL(q): q+2q²`.
pub fn poly_lines(label: &str, p: &QPolynomial) -> [String; 2] {
    [
        format!("{label}: {}", p.to_coeff_string()),
        format!("{label}(q): {}", p.to_q_string()),
    ]
}
