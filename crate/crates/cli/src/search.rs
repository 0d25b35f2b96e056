use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{ArgGroup, Args};
use serde::Serialize;

use crate::report::write_json;
use qfkg_core::boolean::shared_boolean;
use qfkg_core::format::{write_lattice, write_weights};
use qfkg_core::rational::parse_nonnegative;
use qfkg_core::search::{run_search, Counterexample, SearchConfig, SearchMode};
use qfkg_core::{Rational, Witness};

const DEFAULT_EXHAUSTIVE_LIMIT: u64 = 1 << 26;
const DEFAULT_SAMPLES: u64 = 100_000;

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("mode").required(true).args(["exhaustive", "random"])))]
pub struct SearchArgs {
    /// Ground-set size; candidates are weight quadruples on P(n).
    #[arg(long)]
    pub n: usize,
    /// Allowed weight values, comma-separated (integers or p/q).
    #[arg(long, value_delimiter = ',', required = true)]
    pub grid: Vec<String>,
    /// Enumerate every candidate.
    #[arg(long)]
    pub exhaustive: bool,
    /// Sample candidates uniformly from the grid.
    #[arg(long)]
    pub random: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Exhaustive: largest search space allowed. Random: number of samples.
    #[arg(long)]
    pub limit: Option<u64>,
    /// Write each counterexample as weight files, plus a summary.
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
}

#[derive(Serialize)]
struct Summary<'a> {
    command: &'static str,
    config: ConfigRecord,
    elements: &'a [String],
    examined: u64,
    admissible: u64,
    found: Vec<FoundRecord>,
}

#[derive(Serialize)]
struct ConfigRecord {
    n: usize,
    grid: Vec<String>,
    mode: SearchMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    limit: u64,
}

#[derive(Serialize)]
struct FoundRecord {
    index: u64,
    alpha: Vec<String>,
    beta: Vec<String>,
    gamma: Vec<String>,
    delta: Vec<String>,
    witness: Witness,
}

fn values(c: &Counterexample) -> [Vec<String>; 4] {
    c.quad
        .functions()
        .map(|w| w.values().iter().map(ToString::to_string).collect())
}

pub fn run(args: &SearchArgs) -> Result<crate::Outcome> {
    let grid = args
        .grid
        .iter()
        .map(|s| parse_nonnegative(s.trim()).map_err(|e| anyhow::anyhow!("--grid: {e}")))
        .collect::<Result<Vec<Rational>>>()?;
    let mode = if args.random { SearchMode::Random } else { SearchMode::Exhaustive };
    let limit = args.limit.unwrap_or(match mode {
        SearchMode::Exhaustive => DEFAULT_EXHAUSTIVE_LIMIT,
        SearchMode::Random => DEFAULT_SAMPLES,
    });
    let cfg = SearchConfig {
        n: args.n,
        grid,
        mode,
        seed: args.seed,
        limit,
    };
    cfg.validate()?;
    let (carrier, _) = shared_boolean(cfg.n)?;

    let grid_text: Vec<String> = cfg.grid.iter().map(ToString::to_string).collect();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match mode {
        SearchMode::Exhaustive => writeln!(
            out,
            "search: n={} grid={} exhaustive, {} candidates",
            cfg.n,
            grid_text.join(","),
            cfg.space_size().expect("validated")
        )?,
        SearchMode::Random => writeln!(
            out,
            "search: n={} grid={} random, seed {}, {} samples",
            cfg.n,
            grid_text.join(","),
            cfg.seed,
            cfg.limit
        )?,
    }
    writeln!(out, "elements: {}", carrier.names().join(" "))?;
    out.flush()?;

    let mut io_error = None;
    let summary = run_search(&cfg, |c| {
        let [a, b, g, d] = values(c);
        let line = format!(
            "counterexample {}: alpha={} beta={} gamma={} delta={} witness: {}",
            c.index,
            a.join(" "),
            b.join(" "),
            g.join(" "),
            d.join(" "),
            c.witness
        );
        let res = writeln!(out, "{line}").and_then(|_| match mode {
            SearchMode::Random => out.flush(),
            SearchMode::Exhaustive => Ok(()),
        });
        if let Err(e) = res {
            io_error.get_or_insert(e);
        }
    })?;
    if let Some(e) = io_error {
        return Err(e.into());
    }
    writeln!(
        out,
        "examined {}, admissible {}, counterexamples {}",
        summary.examined,
        summary.admissible,
        summary.found.len()
    )?;
    out.flush()?;

    let record = Summary {
        command: "search",
        config: ConfigRecord {
            n: cfg.n,
            grid: grid_text,
            mode,
            seed: (mode == SearchMode::Random).then_some(cfg.seed),
            limit: cfg.limit,
        },
        elements: carrier.names(),
        examined: summary.examined,
        admissible: summary.admissible,
        found: summary
            .found
            .iter()
            .map(|c| {
                let [alpha, beta, gamma, delta] = values(c);
                FoundRecord {
                    index: c.index,
                    alpha,
                    beta,
                    gamma,
                    delta,
                    witness: c.witness.clone(),
                }
            })
            .collect(),
    };
    if let Some(dir) = &args.out {
        fs::create_dir_all(dir).with_context(|| format!("{}: cannot create", dir.display()))?;
        fs::write(dir.join("lattice.lat"), write_lattice(&carrier))?;
        for c in &summary.found {
            let sub = dir.join(format!("ce-{:08}", c.index));
            fs::create_dir_all(&sub)?;
            for (name, w) in ["alpha", "beta", "gamma", "delta"].into_iter().zip(c.quad.functions()) {
                fs::write(sub.join(format!("{name}.w")), write_weights(w))?;
            }
        }
        write_json(&dir.join("summary.json"), &record)?;
    }
    if let Some(path) = &args.json {
        write_json(path, &record)?;
    }
    Ok(crate::Outcome::Holds)
}
