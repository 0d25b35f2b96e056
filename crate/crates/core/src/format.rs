//! Line-oriented text formats.
//!
//! Lattice files:
//!
//! ```text
//! lattice
//! elements: 0 a b 1
//! cover: 0 a
//! cover: 0 b
//! cover: a 1
//! cover: b 1
//! ```
//!
//! Weight files hold one `element value` line per carrier element, where the
//! value is a non-negative rational `p/q` or integer `p`. In both formats
//! blank lines are ignored and `#` starts a comment.

use std::fmt::Write as _;
use std::sync::Arc;

use thiserror::Error;

use crate::lattice::{build_lattice, Lattice};
use crate::rational::{parse_nonnegative, Rational};
use crate::weights::{FamilySelection, WeightFunction};

#[derive(Clone, Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("{0}")]
    Invalid(#[from] crate::error::Error),
    #[error("{0}")]
    Other(String),
}

fn at(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Line {
        line,
        message: message.into(),
    }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

pub fn parse_lattice(text: &str) -> Result<Lattice, ParseError> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, "lattice")) => {}
        Some((n, other)) => return Err(at(n, format!("expected header `lattice`, found `{other}`"))),
        None => return Err(ParseError::Other("empty lattice file".into())),
    }
    let mut elements: Option<Vec<String>> = None;
    let mut covers = Vec::new();
    for (n, line) in lines {
        if let Some(rest) = line.strip_prefix("elements:") {
            if elements.is_some() {
                return Err(at(n, "duplicate `elements:` line"));
            }
            elements = Some(rest.split_whitespace().map(str::to_string).collect());
        } else if let Some(rest) = line.strip_prefix("cover:") {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            match parts.as_slice() {
                [lo, hi] => covers.push((lo.to_string(), hi.to_string())),
                _ => return Err(at(n, "expected `cover: LOWER UPPER`")),
            }
        } else {
            return Err(at(n, format!("unrecognized line `{line}`")));
        }
    }
    let elements = elements.ok_or_else(|| ParseError::Other("missing `elements:` line".into()))?;
    Ok(build_lattice(&elements, &covers)?)
}

/// Writes the element order and the irredundant covers.
pub fn write_lattice(l: &Lattice) -> String {
    let mut out = String::from("lattice\n");
    out.push_str("elements:");
    for name in l.names() {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
    for &(a, b) in l.covers() {
        let _ = writeln!(out, "cover: {} {}", l.name(a), l.name(b));
    }
    out
}

pub fn parse_weights(text: &str, carrier: &Arc<Lattice>) -> Result<WeightFunction, ParseError> {
    let mut values: Vec<Option<Rational>> = vec![None; carrier.len()];
    for (n, line) in content_lines(text) {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [element, value] = parts.as_slice() else {
            return Err(at(n, "expected `ELEMENT VALUE`"));
        };
        let x = carrier
            .index_of(element)
            .ok_or_else(|| at(n, format!("unknown element `{element}`")))?;
        if values[x].is_some() {
            return Err(at(n, format!("duplicate weight for `{element}`")));
        }
        values[x] = Some(parse_nonnegative(value).map_err(|e| at(n, e))?);
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(x, v)| v.ok_or_else(|| ParseError::Other(format!("missing weight for `{}`", carrier.name(x)))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(WeightFunction::new(carrier.clone(), values)?)
}

/// One `element value` line per element, in element order.
pub fn write_weights(w: &WeightFunction) -> String {
    let l = w.carrier();
    let mut out = String::new();
    for x in l.elements() {
        let _ = writeln!(out, "{} {}", l.name(x), w.value(x));
    }
    out
}

/// Splits on commas and whitespace that sit outside `{}` and `()`, so ids
/// like `{1,2}` or `(a,b)` stay whole.
fn split_ids(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '{' | '(' => depth += 1,
            '}' | ')' => depth -= 1,
            ',' | ' ' | '\t' | '\n' | '\r' if depth <= 0 => {
                if start < i {
                    out.push(&s[start..i]);
                }
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    if start < s.len() {
        out.push(&s[start..]);
    }
    out
}

/// `all`, `none`, or element ids separated by commas and/or whitespace.
pub fn parse_selection(spec: &str, carrier: &Lattice) -> Result<FamilySelection, ParseError> {
    let spec = spec.trim();
    match spec {
        "all" => return Ok(FamilySelection::all(carrier)),
        "none" | "" => return Ok(FamilySelection::empty()),
        _ => {}
    }
    let members = split_ids(spec)
        .into_iter()
        .map(|name| {
            carrier
                .index_of(name)
                .ok_or_else(|| ParseError::Other(format!("unknown element `{name}` in selection")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FamilySelection::new(carrier, members)?)
}
