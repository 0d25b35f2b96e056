//! The pairwise-symmetrized strengthening of the four functions theorem,
//! its known counterexample on `P(2)`, and exhaustive or seeded searches
//! for further counterexamples.

pub mod generate;

use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::boolean::shared_boolean;
use crate::error::{Error, Result};
use crate::format::{parse_weights, write_weights};
use crate::inequality::{check_ad_hypothesis, check_q4ft, Q4ftReport};
use crate::lattice::Lattice;
use crate::rational::{int, Rational};
use crate::rng::SeededRng;
use crate::verdict::{Side, Verdict, Witness};
use crate::weights::{FamilySelection, WeightFunction, WeightQuadruple};

/// Largest ground set accepted by the search.
pub const MAX_SEARCH_N: usize = 6;

/// The `P(2)` quadruple that satisfies the AD hypothesis but violates the
/// pairwise inequality at `A = {1}, B = {2}`. Values are listed over
/// `{}, {1}, {2}, {1,2}`.
pub const COUNTEREXAMPLE_TABLE: [[i64; 4]; 4] = [
    [0, 0, 1, 0],
    [1, 1, 1, 0],
    [0, 0, 1, 1],
    [1, 0, 1, 0],
];

pub fn counterexample_table() -> WeightQuadruple {
    let (l, _) = shared_boolean(2).expect("P(2)");
    let [a, b, c, d] = COUNTEREXAMPLE_TABLE;
    WeightQuadruple::from_ints(&l, [&a, &b, &c, &d]).expect("valid table")
}

/// `α(A)β(B) + α(B)β(A) ≤ γ(A)δ(B) + γ(B)δ(A)` over unordered pairs,
/// including `A = B`.
pub fn check_conjecture9(quad: &WeightQuadruple) -> Verdict {
    let l = quad.carrier();
    let (a, b, c, d) = (&quad.alpha, &quad.beta, &quad.gamma, &quad.delta);
    for x in l.elements() {
        for y in x..l.len() {
            let lhs = a.value(x) * b.value(y) + a.value(y) * b.value(x);
            if lhs.is_zero() {
                continue;
            }
            let rhs = c.value(x) * d.value(y) + c.value(y) * d.value(x);
            if lhs > rhs {
                return Verdict::fail(Witness::new(
                    "conjecture9",
                    &[("A", l.name(x)), ("B", l.name(y))],
                    Side::Rational(lhs),
                    Side::Rational(rhs),
                ));
            }
        }
    }
    Verdict::pass()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableReport {
    pub hypothesis: Verdict,
    pub conjecture: Verdict,
    pub q4ft: Q4ftReport,
}

impl TableReport {
    /// Hypothesis holds, the pairwise inequality fails at `({1},{2})` with
    /// `1 > 0`, and the q-analogue still holds.
    pub fn reproduces(&self) -> bool {
        let violation = self.conjecture.witness().is_some_and(|w| {
            w.element("A") == Some("{1}")
                && w.element("B") == Some("{2}")
                && w.lhs == Side::Rational(int(1))
                && w.rhs == Side::Rational(int(0))
        });
        self.hypothesis.holds() && violation && self.q4ft.verdict.holds()
    }
}

pub fn verify_paper_counterexample() -> TableReport {
    let quad = counterexample_table();
    let all = FamilySelection::all(quad.carrier());
    TableReport {
        hypothesis: check_ad_hypothesis(&quad),
        conjecture: check_conjecture9(&quad),
        q4ft: check_q4ft(&quad, &all, &all).expect("P(2) is distributive"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Exhaustive,
    Random,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchConfig {
    /// Ground-set size; candidates live on `P(n)`.
    pub n: usize,
    /// Allowed weight values.
    pub grid: Vec<Rational>,
    pub mode: SearchMode,
    /// Random mode only.
    pub seed: u64,
    /// Exhaustive: largest admissible search space. Random: number of samples.
    pub limit: u64,
}

impl SearchConfig {
    /// Number of candidates in the full grid, `|grid|^(4·2ⁿ)`, or `None` on
    /// overflow.
    pub fn space_size(&self) -> Option<u128> {
        let exp = 4u32.checked_mul(1u32.checked_shl(self.n as u32)?)?;
        (self.grid.len() as u128).checked_pow(exp)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n > MAX_SEARCH_N {
            return Err(Error::Param(format!("n={} exceeds {MAX_SEARCH_N}", self.n)));
        }
        if self.grid.is_empty() || self.grid.len() > 255 {
            return Err(Error::Param("grid needs between 1 and 255 values".into()));
        }
        let mut sorted = self.grid.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != self.grid.len() {
            return Err(Error::Param("grid values must be distinct".into()));
        }
        if sorted[0] < Rational::zero() {
            return Err(Error::Param("grid values must be non-negative".into()));
        }
        if self.mode == SearchMode::Exhaustive {
            match self.space_size() {
                Some(s) if s <= self.limit as u128 => {}
                size => {
                    return Err(Error::BudgetExceeded {
                        space: size.map_or_else(
                            || format!("{}^{}", self.grid.len(), 4u64 << self.n),
                            |s| s.to_string(),
                        ),
                        limit: self.limit,
                    })
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Counterexample {
    /// Candidate index (exhaustive) or sample number (random).
    pub index: u64,
    pub quad: WeightQuadruple,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchSummary {
    pub examined: u64,
    /// Candidates passing the AD hypothesis.
    pub admissible: u64,
    pub found: Vec<Counterexample>,
}

/// Returns every candidate that satisfies the AD hypothesis and violates the
/// pairwise inequality, each re-verified from its serialized form.
pub fn search_counterexamples(cfg: &SearchConfig) -> Result<Vec<Counterexample>> {
    Ok(run_search(cfg, |_| {})?.found)
}

/// Like [`search_counterexamples`] but reports counts and calls `on_found`
/// for each counterexample in emission order.
pub fn run_search(cfg: &SearchConfig, mut on_found: impl FnMut(&Counterexample)) -> Result<SearchSummary> {
    cfg.validate()?;
    let (carrier, _) = shared_boolean(cfg.n)?;
    let eval = CandidateEval::new(&carrier, &cfg.grid);
    let width = 4 * carrier.len();
    let g = cfg.grid.len() as u64;

    let mut summary = SearchSummary {
        examined: 0,
        admissible: 0,
        found: Vec::new(),
    };
    let mut emit = |index: u64, digits: &[u8], summary: &mut SearchSummary| {
        let c = eval.counterexample(index, digits);
        on_found(&c);
        summary.found.push(c);
    };

    match cfg.mode {
        SearchMode::Exhaustive => {
            let total = cfg.space_size().expect("validated") as u64;
            const CHUNK: u64 = 1 << 12;
            let chunks: Vec<(u64, Vec<Hit>)> = (0..total.div_ceil(CHUNK))
                .into_par_iter()
                .map(|c| {
                    let mut digits = vec![0u8; width];
                    let mut admissible = 0;
                    let mut hits = Vec::new();
                    for index in c * CHUNK..((c + 1) * CHUNK).min(total) {
                        decode(index, g, &mut digits);
                        if eval.admissible(&digits) {
                            admissible += 1;
                            if eval.violates(&digits) {
                                hits.push((index, digits.clone()));
                            }
                        }
                    }
                    (admissible, hits)
                })
                .collect();
            summary.examined = total;
            for (admissible, hits) in chunks {
                summary.admissible += admissible;
                for (index, digits) in hits {
                    emit(index, &digits, &mut summary);
                }
            }
        }
        SearchMode::Random => {
            let mut rng = SeededRng::new(cfg.seed);
            let mut digits = vec![0u8; width];
            for index in 0..cfg.limit {
                for d in digits.iter_mut() {
                    *d = rng.below(g as usize) as u8;
                }
                summary.examined += 1;
                if eval.admissible(&digits) {
                    summary.admissible += 1;
                    if eval.violates(&digits) {
                        emit(index, &digits, &mut summary);
                    }
                }
            }
        }
    }
    Ok(summary)
}

/// Base-`g` digits of `index`, most significant first.
/// Candidate index and its digits.
type Hit = (u64, Vec<u8>);

fn decode(mut index: u64, g: u64, digits: &mut [u8]) {
    for d in digits.iter_mut().rev() {
        *d = (index % g) as u8;
        index /= g;
    }
}

/// Candidate evaluation on grid indices. Products of grid values are
/// replaced by their rank among all distinct products, so the AD filter
/// compares small integers while staying exact.
struct CandidateEval {
    carrier: Arc<Lattice>,
    grid: Vec<Rational>,
    products: Vec<Rational>,
    product_rank: Vec<u32>,
    m: usize,
}

impl CandidateEval {
    fn new(carrier: &Arc<Lattice>, grid: &[Rational]) -> Self {
        let g = grid.len();
        let products: Vec<Rational> = (0..g * g).map(|k| &grid[k / g] * &grid[k % g]).collect();
        let mut distinct = products.clone();
        distinct.sort();
        distinct.dedup();
        let product_rank = products
            .iter()
            .map(|p| distinct.binary_search(p).expect("present") as u32)
            .collect();
        CandidateEval {
            carrier: carrier.clone(),
            grid: grid.to_vec(),
            products,
            product_rank,
            m: carrier.len(),
        }
    }

    fn rank(&self, i: u8, j: u8) -> u32 {
        self.product_rank[i as usize * self.grid.len() + j as usize]
    }

    fn product(&self, i: u8, j: u8) -> &Rational {
        &self.products[i as usize * self.grid.len() + j as usize]
    }

    fn admissible(&self, d: &[u8]) -> bool {
        let m = self.m;
        let (a, b, c, e) = (&d[..m], &d[m..2 * m], &d[2 * m..3 * m], &d[3 * m..]);
        let l = &self.carrier;
        (0..m).all(|x| {
            (0..m).all(|y| self.rank(a[x], b[y]) <= self.rank(c[l.join(x, y)], e[l.meet(x, y)]))
        })
    }

    fn violates(&self, d: &[u8]) -> bool {
        let m = self.m;
        let (a, b, c, e) = (&d[..m], &d[m..2 * m], &d[2 * m..3 * m], &d[3 * m..]);
        (0..m).any(|x| {
            (x..m).any(|y| {
                self.product(a[x], b[y]) + self.product(a[y], b[x])
                    > self.product(c[x], e[y]) + self.product(c[y], e[x])
            })
        })
    }

    fn quadruple(&self, d: &[u8]) -> WeightQuadruple {
        let m = self.m;
        let f = |k: usize| {
            WeightFunction::new(
                self.carrier.clone(),
                d[k * m..(k + 1) * m].iter().map(|&i| self.grid[i as usize].clone()).collect(),
            )
            .expect("grid values are non-negative")
        };
        WeightQuadruple::new(f(0), f(1), f(2), f(3)).expect("one carrier")
    }

    /// Builds the counterexample and re-derives both verdicts from the
    /// serialized weight files.
    fn counterexample(&self, index: u64, d: &[u8]) -> Counterexample {
        let quad = self.quadruple(d);
        let witness = reverify(&quad).unwrap_or_else(|e| panic!("candidate {index} failed re-verification: {e}"));
        Counterexample {
            index,
            quad,
            witness,
        }
    }
}

/// Round-trips a quadruple through the weight-file format and re-checks the
/// AD hypothesis and the pairwise inequality. Returns the violation witness.
pub fn reverify(quad: &WeightQuadruple) -> std::result::Result<Witness, String> {
    let carrier = quad.carrier();
    let parsed: Vec<WeightFunction> = quad
        .functions()
        .iter()
        .map(|w| parse_weights(&write_weights(w), carrier).map_err(|e| e.to_string()))
        .collect::<std::result::Result<_, _>>()?;
    let [a, b, c, d]: [WeightFunction; 4] = parsed.try_into().expect("four functions");
    let again = WeightQuadruple::new(a, b, c, d).map_err(|e| e.to_string())?;
    if again != *quad {
        return Err("serialization changed the weights".into());
    }
    if let Some(w) = check_ad_hypothesis(&again).into_witness() {
        return Err(format!("AD hypothesis fails: {w}"));
    }
    check_conjecture9(&again)
        .into_witness()
        .ok_or_else(|| "pairwise inequality holds".into())
}
