use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::Args;
use serde::Serialize;

use qfkg_core::format::{parse_lattice, parse_selection, parse_weights};
use qfkg_core::{
    standard_lattice, Direction, FamilySelection, Lattice, StandardSpec, WeightFunction,
    WeightQuadruple,
};

#[derive(Args, Debug, Clone, Default)]
pub struct LatticeArgs {
    /// Lattice file (`elements:` and `cover:` lines).
    #[arg(long, value_name = "PATH", conflicts_with = "builtin")]
    pub lattice: Option<PathBuf>,
    /// Standard lattice: boolean:N, chain:M, divisor:M, or A*B.
    #[arg(long, value_name = "SPEC")]
    pub builtin: Option<StandardSpec>,
}

impl LatticeArgs {
    pub fn load(&self) -> Result<Arc<Lattice>> {
        match (&self.lattice, &self.builtin) {
            (Some(path), _) => {
                let text = read(path)?;
                let l = parse_lattice(&text).with_context(|| path.display().to_string())?;
                Ok(Arc::new(l))
            }
            (None, Some(spec)) => Ok(Arc::new(standard_lattice(spec)?)),
            (None, None) => bail!("a lattice is required: pass --lattice PATH or --builtin SPEC"),
        }
    }
}

#[derive(Args, Debug, Clone, Default)]
pub struct WeightArgs {
    #[arg(long, value_name = "PATH")]
    pub alpha: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    pub beta: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    pub gamma: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    pub delta: Option<PathBuf>,
    /// Measure for lsm, fkg and qfkg.
    #[arg(long, value_name = "PATH")]
    pub mu: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    pub f: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    pub g: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct SelectionArgs {
    /// First family: `all`, `none`, a comma-separated element list, or @FILE.
    #[arg(long = "X", value_name = "FAMILY", default_value = "all")]
    pub x: String,
    /// Second family, same syntax as --X.
    #[arg(long = "Y", value_name = "FAMILY", default_value = "all")]
    pub y: String,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("{}: cannot read", path.display()))
}

pub fn load_weights(name: &str, path: Option<&PathBuf>, l: &Arc<Lattice>) -> Result<WeightFunction> {
    let Some(path) = path else {
        bail!("--{name} is required for this check");
    };
    let text = read(path)?;
    parse_weights(&text, l).with_context(|| path.display().to_string())
}

pub fn load_selection(flag: &str, spec: &str, l: &Lattice) -> Result<FamilySelection> {
    if let Some(file) = spec.strip_prefix('@') {
        let path = Path::new(file);
        let text: String = read(path)?
            .lines()
            .map(|line| line.split('#').next().unwrap_or(""))
            .collect::<Vec<_>>()
            .join(" ");
        return parse_selection(&text, l).with_context(|| path.display().to_string());
    }
    parse_selection(spec, l).with_context(|| format!("--{flag}"))
}

/// Everything a report depends on, in a form that can be written back to
/// input files.
#[derive(Serialize, Debug, Default)]
pub struct Recorded {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice: Option<RecordedLattice>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub weights: Vec<RecordedWeights>,
    #[serde(rename = "X", skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<String>>,
    #[serde(rename = "Y", skip_serializing_if = "Option::is_none")]
    pub y: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub direction: Option<Direction>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Serialize, Debug)]
pub struct RecordedLattice {
    pub elements: Vec<String>,
    pub covers: Vec<[String; 2]>,
}

#[derive(Serialize, Debug)]
pub struct RecordedWeights {
    pub name: String,
    /// `[element, value]` pairs in element order.
    pub values: Vec<[String; 2]>,
}

impl Recorded {
    pub fn lattice(&mut self, l: &Lattice) {
        self.lattice = Some(RecordedLattice {
            elements: l.names().to_vec(),
            covers: l
                .covers()
                .iter()
                .map(|&(a, b)| [l.name(a).to_string(), l.name(b).to_string()])
                .collect(),
        });
    }

    pub fn weights(&mut self, name: &str, w: &WeightFunction) {
        let l = w.carrier();
        self.weights.push(RecordedWeights {
            name: name.to_string(),
            values: l
                .elements()
                .map(|x| [l.name(x).to_string(), w.value(x).to_string()])
                .collect(),
        });
    }

    pub fn quadruple(&mut self, q: &WeightQuadruple) {
        for (name, w) in ["alpha", "beta", "gamma", "delta"].into_iter().zip(q.functions()) {
            self.weights(name, w);
        }
    }

    pub fn selections(&mut self, l: &Lattice, x: &FamilySelection, y: &FamilySelection) {
        let names = |s: &FamilySelection| s.names(l).into_iter().map(String::from).collect();
        self.x = Some(names(x));
        self.y = Some(names(y));
    }
}

pub fn load_quadruple(w: &WeightArgs, l: &Arc<Lattice>) -> Result<WeightQuadruple> {
    Ok(WeightQuadruple::new(
        load_weights("alpha", w.alpha.as_ref(), l)?,
        load_weights("beta", w.beta.as_ref(), l)?,
        load_weights("gamma", w.gamma.as_ref(), l)?,
        load_weights("delta", w.delta.as_ref(), l)?,
    )?)
}
