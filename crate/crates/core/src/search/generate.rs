//! Seeded generators of valid instances: log-supermodular measures, monotone
//! functions, and quadruples satisfying the AD hypothesis.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::birkhoff::birkhoff_embed;
use crate::error::{Error, Result};
use crate::inequality::{check_ad_hypothesis, is_log_supermodular, is_monotone, Direction};
use crate::lattice::Lattice;
use crate::rational::{int, ratio, Rational};
use crate::reduction::fkg_quadruple;
use crate::rng::SeededRng;
use crate::weights::{FamilySelection, WeightFunction, WeightQuadruple};

#[derive(Clone, Debug)]
pub struct LsmParams {
    /// Choices for the per-element factors `u_i ≥ 0`.
    pub unary: Vec<Rational>,
    /// Choices for the pair factors `w_ij ≥ 1`.
    pub pair: Vec<Rational>,
}

impl Default for LsmParams {
    fn default() -> Self {
        LsmParams {
            unary: vec![int(0), ratio(1, 2), int(1), int(2), int(3)],
            pair: vec![int(1), int(1), ratio(3, 2), int(2), int(3)],
        }
    }
}

/// `μ(a) = Π_{i∈φ(a)} u_i · Π_{{i,j}⊆φ(a)} w_ij` through the Birkhoff
/// embedding `φ`; on `P(n)` this is the plain product over the subset.
pub fn log_supermodular_from(
    l: &Arc<Lattice>,
    unary: &[Rational],
    pair: &[Vec<Rational>],
) -> Result<WeightFunction> {
    let emb = birkhoff_embed(l)?;
    let n = emb.n();
    if unary.len() != n || pair.len() != n || pair.iter().any(|r| r.len() != n) {
        return Err(Error::Param(format!("factor tables must be {n} and {n}x{n}")));
    }
    if pair.iter().flatten().any(|w| *w < Rational::one()) {
        return Err(Error::Param("pair factors must be at least 1".into()));
    }
    WeightFunction::from_fn(l.clone(), |a| {
        let img = &emb.image[a];
        let mut v: Rational = img.iter().map(|&i| &unary[i - 1]).product();
        for (s, &i) in img.iter().enumerate() {
            for &j in &img[s + 1..] {
                v *= &pair[i - 1][j - 1];
            }
        }
        v
    })
}

/// Random log-supermodular function on a distributive lattice.
pub fn random_log_supermodular(l: &Arc<Lattice>, rng: &mut SeededRng, params: &LsmParams) -> Result<WeightFunction> {
    let n = birkhoff_embed(l)?.n();
    let unary: Vec<Rational> = (0..n).map(|_| rng.pick(&params.unary).clone()).collect();
    let mut pair = vec![vec![Rational::one(); n]; n];
    #[allow(clippy::needless_range_loop)]
    for i in 0..n {
        for j in i + 1..n {
            let w = rng.pick(&params.pair).clone();
            pair[i][j] = w.clone();
            pair[j][i] = w;
        }
    }
    let mu = log_supermodular_from(l, &unary, &pair)?;
    assert!(is_log_supermodular(&mu).holds(), "generator produced a non-log-supermodular measure");
    Ok(mu)
}

#[derive(Clone, Debug)]
pub struct MonotoneParams {
    pub max_thresholds: usize,
    pub values: Vec<Rational>,
}

impl Default for MonotoneParams {
    fn default() -> Self {
        MonotoneParams {
            max_thresholds: 4,
            values: vec![ratio(1, 2), int(1), int(2), int(3)],
        }
    }
}

/// Increasing: `f(x) = max{v : (t, v) with t ≤ x}`, zero if no threshold lies
/// below `x`. Decreasing uses `t ≥ x`.
pub fn monotone_from_thresholds(
    l: &Arc<Lattice>,
    direction: Direction,
    thresholds: &[(usize, Rational)],
) -> Result<WeightFunction> {
    WeightFunction::from_fn(l.clone(), |x| {
        thresholds
            .iter()
            .filter(|(t, _)| match direction {
                Direction::Increasing => l.leq(*t, x),
                Direction::Decreasing => l.leq(x, *t),
            })
            .map(|(_, v)| v.clone())
            .max()
            .unwrap_or_else(Rational::zero)
    })
}

pub fn random_monotone(
    l: &Arc<Lattice>,
    direction: Direction,
    rng: &mut SeededRng,
    params: &MonotoneParams,
) -> Result<WeightFunction> {
    let k = rng.below(params.max_thresholds + 1);
    let thresholds: Vec<(usize, Rational)> = (0..k)
        .map(|_| (rng.below(l.len()), rng.pick(&params.values).clone()))
        .collect();
    let f = monotone_from_thresholds(l, direction, &thresholds)?;
    assert!(is_monotone(&f, direction).holds(), "generator produced a non-monotone function");
    Ok(f)
}

/// Ways of producing quadruples that satisfy the AD hypothesis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `fkg_quadruple` over a random log-supermodular `μ` and monotone `f, g`.
    Fkg,
    /// Random sparse grid values, kept only if the hypothesis holds.
    Rejection,
    /// Random `α, β, δ` with `γ` as small as the hypothesis allows.
    Tight,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Fkg, Family::Rejection, Family::Tight];
}

pub fn random_fkg_instance(
    l: &Arc<Lattice>,
    rng: &mut SeededRng,
) -> Result<(WeightFunction, WeightFunction, WeightFunction, Direction)> {
    let mu = random_log_supermodular(l, rng, &LsmParams::default())?;
    let direction = if rng.chance(1, 2) {
        Direction::Increasing
    } else {
        Direction::Decreasing
    };
    let params = MonotoneParams::default();
    let f = random_monotone(l, direction, rng, &params)?;
    let g = random_monotone(l, direction, rng, &params)?;
    Ok((mu, f, g, direction))
}

pub fn random_fkg_quadruple(l: &Arc<Lattice>, rng: &mut SeededRng) -> Result<WeightQuadruple> {
    let (mu, f, g, direction) = random_fkg_instance(l, rng)?;
    fkg_quadruple(&mu, &f, &g, direction)
}

/// Rejection sampling: `α, β` are mostly zero, `γ, δ` mostly positive, all
/// drawn from a small grid. Gives up after `attempts` draws.
pub fn random_rejection_quadruple(
    l: &Arc<Lattice>,
    rng: &mut SeededRng,
    attempts: usize,
) -> Result<Option<WeightQuadruple>> {
    let grid = [ratio(1, 2), int(1), int(2), int(3)];
    let mut draw = |zero_num: usize, zero_den: usize| {
        WeightFunction::from_fn(l.clone(), |_| {
            if rng.chance(zero_num, zero_den) {
                Rational::zero()
            } else {
                rng.pick(&grid).clone()
            }
        })
    };
    for _ in 0..attempts {
        let sparse = if l.len() > 4 { (5, 6) } else { (1, 2) };
        let quad = WeightQuadruple::new(
            draw(sparse.0, sparse.1)?,
            draw(sparse.0, sparse.1)?,
            draw(1, 8)?,
            draw(1, 8)?,
        )?;
        if check_ad_hypothesis(&quad).holds() {
            return Ok(Some(quad));
        }
    }
    Ok(None)
}

/// `γ(z) = max_{x∨y=z} α(x)β(y)/δ(x∧y)`, occasionally raised, so many pairs
/// meet the hypothesis with equality.
pub fn random_tight_quadruple(l: &Arc<Lattice>, rng: &mut SeededRng) -> Result<WeightQuadruple> {
    let grid = [int(0), ratio(1, 2), int(1), int(2), int(3)];
    let positive = [ratio(1, 2), int(1), int(2), int(3)];
    let alpha = WeightFunction::from_fn(l.clone(), |_| rng.pick(&grid).clone())?;
    let beta = WeightFunction::from_fn(l.clone(), |_| rng.pick(&grid).clone())?;
    let delta = WeightFunction::from_fn(l.clone(), |_| rng.pick(&positive).clone())?;
    let mut gamma = vec![Rational::zero(); l.len()];
    for x in l.elements() {
        for y in l.elements() {
            let need = alpha.value(x) * beta.value(y) / delta.value(l.meet(x, y));
            let z = l.join(x, y);
            if need > gamma[z] {
                gamma[z] = need;
            }
        }
    }
    for v in gamma.iter_mut() {
        if rng.chance(1, 4) {
            *v += rng.pick(&positive);
        }
    }
    let quad = WeightQuadruple::new(alpha, beta, WeightFunction::new(l.clone(), gamma)?, delta)?;
    assert!(check_ad_hypothesis(&quad).holds(), "tight construction violated the hypothesis");
    Ok(quad)
}

/// A quadruple satisfying the AD hypothesis from the given family. Rejection
/// sampling falls back to the tight family if it runs dry.
pub fn random_ad_quadruple(l: &Arc<Lattice>, rng: &mut SeededRng, family: Family) -> Result<WeightQuadruple> {
    match family {
        Family::Fkg => random_fkg_quadruple(l, rng),
        Family::Rejection => match random_rejection_quadruple(l, rng, 10_000)? {
            Some(q) => Ok(q),
            None => random_tight_quadruple(l, rng),
        },
        Family::Tight => random_tight_quadruple(l, rng),
    }
}

/// Each element independently with probability one half.
pub fn random_selection(l: &Lattice, rng: &mut SeededRng) -> FamilySelection {
    FamilySelection::new(l, l.elements().filter(|_| rng.chance(1, 2))).expect("in range")
}
