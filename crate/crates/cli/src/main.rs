//! `qfkg`: check lattice correlation inequalities on explicit inputs and
//! search small grids for counterexamples to the pairwise strengthening.
//!
//! Exit codes: 0 when the checked property holds, 1 when it fails (a witness
//! is printed), 2 on any input or configuration error.

mod check;
mod inputs;
mod reproduce;
mod report;
mod search;

use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "qfkg", version, about = "Exact checks of lattice correlation inequalities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one checker on lattice and weight files.
    Check(check::CheckArgs),
    /// Print the join-irreducibles and the subset image of every element.
    Embed(check::EmbedArgs),
    /// Search a weight grid on P(n) for pairwise-inequality counterexamples.
    Search(search::SearchArgs),
    /// Compare the direct q-analogue check with its embedded, sliced replay.
    ReplayProof(reproduce::ReplayArgs),
    /// Reproduce the worked examples: counterexample table, embeddings, replays.
    VerifyPaper(reproduce::VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Fails,
}

impl Outcome {
    pub fn from_holds(holds: bool) -> Self {
        if holds {
            Outcome::Holds
        } else {
            Outcome::Fails
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Check(a) => check::run_check(a),
        Command::Embed(a) => check::run_embed(a),
        Command::Search(a) => search::run(a),
        Command::ReplayProof(a) => reproduce::run_replay(a),
        Command::VerifyPaper(a) => reproduce::run_verify(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Outcome::Holds) => ExitCode::SUCCESS,
        Ok(Outcome::Fails) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
