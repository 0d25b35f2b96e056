use std::path::PathBuf;
use std::sync::Arc;

use anyhow::Result;
use clap::Args;
use serde::Serialize;
use serde_json::json;

use crate::inputs::{load_quadruple, load_selection, LatticeArgs, Recorded, SelectionArgs, WeightArgs};
use crate::report::{headline, write_json, write_report, Checked};
use crate::Outcome;
use qfkg_core::lattice::{boolean, chain, divisor, product};
use qfkg_core::reduction::{replay_proof, ReplayReport};
use qfkg_core::rng::SeededRng;
use qfkg_core::search::generate::{random_ad_quadruple, random_selection, Family};
use qfkg_core::search::verify_paper_counterexample;
use qfkg_core::{
    birkhoff_embed, check_ad_hypothesis, standard_lattice, verify_embedding, Lattice, StandardSpec,
    WeightQuadruple,
};

#[derive(Args, Debug)]
pub struct ReplayArgs {
    #[command(flatten)]
    pub lattice: LatticeArgs,
    #[command(flatten)]
    pub weights: WeightArgs,
    #[command(flatten)]
    pub families: SelectionArgs,
    /// Generate α, β, γ, δ, X and Y from this seed instead of reading them.
    #[arg(long, conflicts_with_all = ["alpha", "beta", "gamma", "delta"])]
    pub seed: Option<u64>,
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
}

/// A seeded instance: an AD quadruple and two random families.
fn seeded_instance(
    l: &Arc<Lattice>,
    seed: u64,
) -> Result<(WeightQuadruple, qfkg_core::FamilySelection, qfkg_core::FamilySelection)> {
    let mut rng = SeededRng::new(seed);
    let family = Family::ALL[(seed % 3) as usize];
    let quad = random_ad_quadruple(l, &mut rng, family)?;
    let x = random_selection(l, &mut rng);
    let y = random_selection(l, &mut rng);
    Ok((quad, x, y))
}

fn replay_lines(l: &Lattice, r: &ReplayReport) -> Vec<String> {
    let mut lines = vec![
        format!(
            "embedding: n={}, irreducibles {}",
            r.embedding.n(),
            r.embedding.irreducibles.iter().map(|&x| l.name(x)).collect::<Vec<_>>().join(" ")
        ),
        format!("direct: {}", r.direct.verdict),
        format!("embedded hypothesis: {}", r.embedded_hypothesis),
        "k  direct-lhs  direct-rhs  slice-lhs  slice-rhs  live  verdict".into(),
    ];
    for s in &r.slices {
        lines.push(format!(
            "{}  {}  {}  {}  {}  {}  {}",
            s.k,
            r.direct.lhs.coeff(s.k),
            r.direct.rhs.coeff(s.k),
            s.lhs,
            s.rhs,
            s.live_slices().count(),
            if s.verdict.holds() { "ok" } else { "FAILS" }
        ));
    }
    if let Some(k) = r.mismatch {
        lines.push(format!("mismatch at q^{k}"));
    }
    lines
}

pub fn run_replay(args: &ReplayArgs) -> Result<Outcome> {
    let l = args.lattice.load()?;
    let mut rec = Recorded::default();
    rec.lattice(&l);
    let (quad, x, y) = match args.seed {
        Some(seed) => {
            rec.seed = Some(seed);
            seeded_instance(&l, seed)?
        }
        None => {
            let quad = load_quadruple(&args.weights, &l)?;
            let x = load_selection("X", &args.families.x, &l)?;
            let y = load_selection("Y", &args.families.y, &l)?;
            (quad, x, y)
        }
    };
    rec.quadruple(&quad);
    rec.selections(&l, &x, &y);
    let hypothesis = check_ad_hypothesis(&quad);
    let r = replay_proof(&quad, &x, &y)?;
    let mut c = Checked {
        holds: r.agrees(),
        lines: vec![headline("replay-proof", r.agrees())],
        result: json!({ "hypothesis": hypothesis, "replay": r }),
    };
    c.line(format!("hypothesis: {hypothesis}"));
    c.lines.extend(replay_lines(&l, &r));
    for line in &c.lines {
        println!("{line}");
    }
    if let Some(path) = &args.json {
        write_report(path, "replay-proof", None, &rec, &c)?;
    }
    Ok(Outcome::from_holds(c.holds))
}

#[derive(Serialize)]
struct Section {
    name: String,
    ok: bool,
    detail: String,
}

fn embedding_catalog() -> Vec<(String, Lattice)> {
    let mut out = Vec::new();
    for m in 1..=8 {
        out.push((format!("chain({m})"), chain(m).expect("small chain")));
    }
    for n in 0..=4 {
        out.push((format!("P({n})"), boolean(n).expect("small boolean")));
    }
    for m in [12, 36, 60] {
        out.push((format!("divisor({m})"), divisor(m).expect("small divisor")));
    }
    for a in 2..=4 {
        for b in 2..=4 {
            let l = product(&chain(a).expect("chain"), &chain(b).expect("chain"));
            out.push((format!("chain({a})*chain({b})"), l));
        }
    }
    out
}

pub fn run_verify(args: &VerifyArgs) -> Result<Outcome> {
    let mut sections = Vec::new();

    let table = verify_paper_counterexample();
    let detail = match table.conjecture.witness() {
        Some(w) if table.hypothesis.holds() => format!(
            "pairwise counterexample: hypothesis OK, violation at ({},{}) {}>{}",
            w.element("A").unwrap_or("?"),
            w.element("B").unwrap_or("?"),
            w.lhs,
            w.rhs
        ),
        Some(_) => format!("pairwise counterexample: hypothesis FAILS ({})", table.hypothesis),
        None => "pairwise counterexample: no violation found".into(),
    };
    sections.push(Section {
        name: "counterexample".into(),
        ok: table.reproduces(),
        detail,
    });

    let d12 = divisor(12).expect("divisor(12)");
    let emb = birkhoff_embed(&d12)?;
    let v = verify_embedding(&d12, &emb);
    sections.push(Section {
        name: "embedding divisor(12)".into(),
        ok: v.holds() && emb.n() == 3,
        detail: if v.holds() {
            format!("embedding divisor(12): meet, join and rank preserved, n={}", emb.n())
        } else {
            format!("embedding divisor(12): {v}")
        },
    });

    let catalog = embedding_catalog();
    let failures: Vec<String> = catalog
        .iter()
        .filter_map(|(name, l)| {
            let ok = birkhoff_embed(l).map(|e| verify_embedding(l, &e).holds()).unwrap_or(false);
            (!ok).then(|| name.clone())
        })
        .collect();
    sections.push(Section {
        name: "embedding catalog".into(),
        ok: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("embedding catalog: {} lattices OK", catalog.len())
        } else {
            format!("embedding catalog: FAILS on {}", failures.join(", "))
        },
    });

    let q = &table.q4ft;
    let ok = q.verdict.holds()
        && q.lhs.to_coeff_string() == "0 1 2"
        && q.rhs.to_coeff_string() == "0 1 2 1";
    sections.push(Section {
        name: "q4ft table".into(),
        ok,
        detail: format!(
            "q-4FT table: {} {} {}",
            q.lhs.to_q_string(),
            if q.verdict.holds() { "≪" } else { "⋠" },
            q.rhs.to_q_string()
        ),
    });

    for (spec, seed) in [("divisor:12", 1u64), ("chain:3*chain:3", 2), ("boolean:3", 3)] {
        let spec: StandardSpec = spec.parse()?;
        let l = Arc::new(standard_lattice(&spec)?);
        let (quad, x, y) = seeded_instance(&l, seed)?;
        let r = replay_proof(&quad, &x, &y)?;
        let ok = r.agrees() && r.direct.verdict.holds() && r.embedded_hypothesis.holds();
        sections.push(Section {
            name: format!("replay {spec}"),
            ok,
            detail: format!(
                "proof replay {spec} seed {seed}: {}, k=0..{}",
                if ok { "direct and sliced routes agree" } else { "MISMATCH" },
                2 * r.embedding.n()
            ),
        });
    }

    for s in &sections {
        println!("{}{}", s.detail, if s.ok { "" } else { "  [FAILED]" });
    }
    let ok = sections.iter().all(|s| s.ok);
    println!("{}", if ok { "all checks OK" } else { "verification FAILED" });
    if let Some(path) = &args.json {
        write_json(path, &json!({ "command": "verify-paper", "ok": ok, "sections": sections }))?;
    }
    Ok(Outcome::from_holds(ok))
}
