use thiserror::Error;

use crate::verdict::Witness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which bound a non-lattice pair is missing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    Join,
    Meet,
}

impl std::fmt::Display for BoundKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundKind::Join => f.write_str("minimal upper bounds"),
            BoundKind::Meet => f.write_str("maximal lower bounds"),
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq)]
pub enum Error {
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("cover ({lower}, {upper}) references unknown element `{unknown}`")]
    UnknownElement {
        lower: String,
        upper: String,
        unknown: String,
    },
    #[error("covers contain a cycle through `{0}`")]
    Cycle(String),
    #[error("not a lattice: pair ({a}, {b}) has {} {kind} [{}]", .candidates.len(), .candidates.join(", "))]
    NotALattice {
        a: String,
        b: String,
        kind: BoundKind,
        candidates: Vec<String>,
    },
    #[error("lattice is not distributive{}", fmt_witness(.0))]
    NotDistributive(Option<Box<Witness>>),
    #[error("lattice is not a Boolean lattice P(n)")]
    NotBoolean,
    #[error("invalid parameter: {0}")]
    Param(String),
    #[error("precondition failed: {premise}{}", fmt_witness(.witness))]
    PreconditionFailed {
        premise: String,
        witness: Option<Box<Witness>>,
    },
    #[error("weight functions are defined on different carriers")]
    CarrierMismatch,
    #[error("weight for `{element}` is negative ({value})")]
    NegativeWeight { element: String, value: String },
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("element index {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("search space of {space} candidates exceeds the limit of {limit}")]
    BudgetExceeded { space: String, limit: u64 },
}

fn fmt_witness(w: &Option<Box<Witness>>) -> String {
    match w {
        Some(w) => format!(" ({w})"),
        None => String::new(),
    }
}

impl Error {
    pub(crate) fn precondition(premise: impl Into<String>, witness: Option<Witness>) -> Self {
        Error::PreconditionFailed {
            premise: premise.into(),
            witness: witness.map(Box::new),
        }
    }
}
