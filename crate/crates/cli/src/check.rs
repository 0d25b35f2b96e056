use std::path::PathBuf;
use std::sync::Arc;

use anyhow::{bail, Result};
use clap::{Args, ValueEnum};
use serde_json::json;

use crate::inputs::{load_quadruple, load_selection, load_weights, LatticeArgs, Recorded, SelectionArgs, WeightArgs};
use crate::report::{family, poly_lines, write_report, Checked};
use crate::Outcome;
use qfkg_core::search::check_conjecture9;
use qfkg_core::{
    birkhoff_embed, check_4ft_conclusion, check_ad_hypothesis, check_fkg_q, check_q4ft,
    check_q4ft_stronger, check_rank_modularity, check_setminus_lemma, is_distributive,
    is_log_supermodular, is_monotone, verify_embedding, Direction, Lattice,
};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Distributive,
    ModularRank,
    Embed,
    Ad,
    #[value(name = "4ft")]
    FourFt,
    Q4ft,
    Q4ftStronger,
    Lemma8,
    Lsm,
    Monotone,
    Fkg,
    Qfkg,
    Conjecture9,
}

impl Kind {
    fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Which condition to check.
    pub kind: Kind,
    #[command(flatten)]
    pub lattice: LatticeArgs,
    #[command(flatten)]
    pub weights: WeightArgs,
    #[command(flatten)]
    pub families: SelectionArgs,
    /// Monotonicity direction (monotone; optional for fkg and qfkg).
    #[arg(long, value_name = "DIR")]
    pub direction: Option<Direction>,
    /// Also write a JSON report.
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct EmbedArgs {
    #[command(flatten)]
    pub lattice: LatticeArgs,
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
}

pub fn run_check(args: &CheckArgs) -> Result<Outcome> {
    let l = args.lattice.load()?;
    let mut rec = Recorded::default();
    rec.lattice(&l);
    let kind = args.kind.name();
    let checked = dispatch(args, &l, &mut rec, &kind)?;
    finish("check", Some(&kind), &rec, &checked, args.json.as_ref())
}

pub fn run_embed(args: &EmbedArgs) -> Result<Outcome> {
    let l = args.lattice.load()?;
    let mut rec = Recorded::default();
    rec.lattice(&l);
    let checked = embed(&l, "embed")?;
    finish("embed", None, &rec, &checked, args.json.as_ref())
}

fn finish(
    command: &str,
    kind: Option<&str>,
    rec: &Recorded,
    checked: &Checked,
    json: Option<&PathBuf>,
) -> Result<Outcome> {
    for line in &checked.lines {
        println!("{line}");
    }
    if let Some(path) = json {
        write_report(path, command, kind, rec, checked)?;
    }
    Ok(Outcome::from_holds(checked.holds))
}

fn dispatch(args: &CheckArgs, l: &Arc<Lattice>, rec: &mut Recorded, kind: &str) -> Result<Checked> {
    let w = &args.weights;
    let weight = |name: &str, rec: &mut Recorded| -> Result<_> {
        let path = match name {
            "mu" => w.mu.as_ref(),
            "f" => w.f.as_ref(),
            _ => w.g.as_ref(),
        };
        let f = load_weights(name, path, l)?;
        rec.weights(name, &f);
        Ok(f)
    };
    let quad = |rec: &mut Recorded| -> Result<_> {
        let q = load_quadruple(w, l)?;
        rec.quadruple(&q);
        Ok(q)
    };
    let selections = |rec: &mut Recorded| -> Result<_> {
        let x = load_selection("X", &args.families.x, l)?;
        let y = load_selection("Y", &args.families.y, l)?;
        rec.selections(l, &x, &y);
        Ok((x, y))
    };

    Ok(match args.kind {
        Kind::Distributive => {
            let v = is_distributive(l);
            let mut c = Checked::new(kind, &v, json!({ "verdict": v }))?;
            c.line(format!("elements: {}", l.len()));
            c
        }
        Kind::ModularRank => {
            let v = check_rank_modularity(l);
            let ranks: Vec<_> = l.elements().map(|x| json!([l.name(x), l.rank(x)])).collect();
            let mut c = Checked::new(kind, &v, json!({ "verdict": v, "ranks": ranks }))?;
            for x in l.elements() {
                c.line(format!("r({}) = {}", l.name(x), l.rank(x)));
            }
            c
        }
        Kind::Embed => embed(l, kind)?,
        Kind::Ad => {
            let q = quad(rec)?;
            let v = check_ad_hypothesis(&q);
            let mut c = Checked::new(kind, &v, json!({ "verdict": v }))?;
            c.line(format!("pairs: {}", l.len() * l.len()));
            c
        }
        Kind::FourFt => {
            let q = quad(rec)?;
            let (x, y) = selections(rec)?;
            let r = check_4ft_conclusion(&q, &x, &y);
            let mut c = Checked::new(kind, &r.verdict, &r)?;
            c.line(format!("X∨Y: {}", family(l, &r.join)))
                .line(format!("X∧Y: {}", family(l, &r.meet)))
                .line(format!("alpha(X) = {}, beta(Y) = {}", r.alpha_sum, r.beta_sum))
                .line(format!("gamma(X∨Y) = {}, delta(X∧Y) = {}", r.gamma_sum, r.delta_sum))
                .line(format!("LHS: {}", r.lhs))
                .line(format!("RHS: {}", r.rhs));
            c
        }
        Kind::Q4ft => {
            let q = quad(rec)?;
            let (x, y) = selections(rec)?;
            let r = check_q4ft(&q, &x, &y)?;
            let mut c = Checked::new(kind, &r.verdict, &r)?;
            c.lines.extend(poly_lines("LHS", &r.lhs));
            c.lines.extend(poly_lines("RHS", &r.rhs));
            if r.vacuous {
                c.line("note: X or Y is empty, so the left side is zero");
            }
            c
        }
        Kind::Q4ftStronger => {
            let q = quad(rec)?;
            let r = check_q4ft_stronger(&q)?;
            let mut c = Checked::new(kind, &r.verdict, &r)?;
            c.line(format!("LHS: {}", r.lhs)).line(format!("RHS: {}", r.rhs));
            c
        }
        Kind::Lemma8 => {
            let q = quad(rec)?;
            let r = check_setminus_lemma(&q)?;
            let holds = r.hypothesis.holds() && r.conclusion.verdict.holds();
            let mut c = Checked {
                holds,
                lines: vec![crate::report::headline(kind, holds)],
                result: serde_json::to_value(&r)?,
            };
            c.line(format!("hypothesis: {}", r.hypothesis))
                .line(format!("conclusion: {}", r.conclusion.verdict))
                .line(format!("LHS: {}", r.conclusion.lhs))
                .line(format!("RHS: {}", r.conclusion.rhs));
            c
        }
        Kind::Lsm => {
            let mu = weight("mu", rec)?;
            let v = is_log_supermodular(&mu);
            Checked::new(kind, &v, json!({ "verdict": v }))?
        }
        Kind::Monotone => {
            let Some(dir) = args.direction else {
                bail!("--direction is required for the monotone check");
            };
            rec.direction = Some(dir);
            let f = weight("f", rec)?;
            let v = is_monotone(&f, dir);
            let mut c = Checked::new(kind, &v, json!({ "direction": dir, "verdict": v }))?;
            c.line(format!("direction: {dir}"));
            c
        }
        Kind::Fkg | Kind::Qfkg => {
            let mu = weight("mu", rec)?;
            let f = weight("f", rec)?;
            let g = weight("g", rec)?;
            if let Some(dir) = args.direction {
                rec.direction = Some(dir);
                for (name, h) in [("f", &f), ("g", &g)] {
                    if let Some(w) = is_monotone(h, dir).into_witness() {
                        bail!("precondition failed: {name} is not {dir} ({w})");
                    }
                }
            }
            let r = check_fkg_q(&mu, &f, &g)?;
            let verdict = if args.kind == Kind::Fkg { &r.fkg.verdict } else { &r.verdict };
            let mut c = Checked::new(kind, verdict, &r)?;
            c.line(format!("direction: {}", r.direction));
            if args.kind == Kind::Fkg {
                c.line(format!("LHS: {}", r.fkg.lhs)).line(format!("RHS: {}", r.fkg.rhs));
            } else {
                for (label, p) in [("P(f)", &r.p_f), ("P(g)", &r.p_g), ("P(1)", &r.p_one), ("P(fg)", &r.p_fg)] {
                    c.line(format!("{label}: {}", p.to_q_string()));
                }
                c.lines.extend(poly_lines("LHS", &r.lhs));
                c.lines.extend(poly_lines("RHS", &r.rhs));
            }
            c
        }
        Kind::Conjecture9 => {
            let q = quad(rec)?;
            let hyp = check_ad_hypothesis(&q);
            let v = check_conjecture9(&q);
            let mut c = Checked::new(kind, &v, json!({ "hypothesis": hyp, "verdict": v }))?;
            c.line(format!("hypothesis: {hyp}"));
            c
        }
    })
}

fn embed(l: &Arc<Lattice>, kind: &str) -> Result<Checked> {
    let emb = birkhoff_embed(l)?;
    let v = verify_embedding(l, &emb);
    let irreducibles: Vec<&str> = emb.irreducibles.iter().map(|&x| l.name(x)).collect();
    let image: Vec<_> = l.elements().map(|x| json!([l.name(x), emb.image[x]])).collect();
    let mut c = Checked::new(
        kind,
        &v,
        json!({ "n": emb.n(), "irreducibles": irreducibles, "image": image, "verdict": v }),
    )?;
    c.line(format!("n = {}", emb.n()));
    for (i, name) in irreducibles.iter().enumerate() {
        c.line(format!("x{} = {name}", i + 1));
    }
    for x in l.elements() {
        let set: Vec<String> = emb.image[x].iter().map(ToString::to_string).collect();
        c.line(format!("phi({}) = {{{}}}", l.name(x), set.join(",")));
    }
    Ok(c)
}
