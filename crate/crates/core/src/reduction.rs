//! Executable versions of the transformations that carry the q-analogue of
//! the four functions theorem from Boolean lattices down to arbitrary
//! distributive ones. Every transformation returns fresh weight functions, so
//! they chain freely in property tests.

use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::birkhoff::{birkhoff_embed, BirkhoffEmbedding};
use crate::boolean::{shared_boolean, BooleanView};
use crate::error::{Error, Result};
use crate::inequality::{
    check_ad_hypothesis, check_q4ft, check_q4ft_stronger, is_log_supermodular, is_monotone,
    Direction, Q4ftReport,
};
use crate::lattice::subset_name;
use crate::rational::Rational;
use crate::verdict::{Side, Verdict, Witness};
use crate::weights::{FamilySelection, WeightFunction, WeightQuadruple};

/// Pushes `w` restricted to `selection` forward along the embedding:
/// `w′(φ(x)) = w(x)` for `x` in the selection, zero elsewhere on `P(n)`.
pub fn extend_via_embedding(
    emb: &BirkhoffEmbedding,
    w: &WeightFunction,
    selection: &FamilySelection,
) -> Result<WeightFunction> {
    let (target, view) = shared_boolean(emb.n())?;
    let mut values = vec![Rational::zero(); target.len()];
    for x in selection.iter() {
        values[view.element(emb.mask(x))] = w.value(x).clone();
    }
    WeightFunction::new(target, values)
}

/// Bits of `mask` listed low to high.
fn bits(mask: u64) -> Vec<u32> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Spreads a mask over `0..m` onto the given positions.
fn spread(local: u64, positions: &[u32]) -> u64 {
    positions
        .iter()
        .enumerate()
        .filter(|(j, _)| local >> j & 1 == 1)
        .fold(0, |m, (_, &p)| m | 1 << p)
}

/// Restriction to the interval `[F, G]`, relabelled as `P(G∖F)`:
/// `α′(A) = α(A ∪ F)` and likewise for `β, γ, δ`. Masks are over the
/// ground set of the carrier (bit `i-1` for element `i`).
pub fn interval_restriction(quad: &WeightQuadruple, lower: u64, upper: u64) -> Result<WeightQuadruple> {
    let view = BooleanView::of(quad.carrier())?;
    interval_restriction_with(quad, &view, lower, upper)
}

fn interval_restriction_with(
    quad: &WeightQuadruple,
    view: &BooleanView,
    lower: u64,
    upper: u64,
) -> Result<WeightQuadruple> {
    if lower & !upper != 0 || upper & !view.full_mask() != 0 {
        return Err(Error::precondition(
            format!(
                "interval needs F ⊆ G ⊆ [n], got F={} G={}",
                subset_name(lower),
                subset_name(upper)
            ),
            None,
        ));
    }
    let positions = bits(upper & !lower);
    let (target, tview) = shared_boolean(positions.len())?;
    let restrict = |w: &WeightFunction| {
        WeightFunction::from_fn(target.clone(), |a| {
            w.value(view.element(lower | spread(tview.mask(a), &positions))).clone()
        })
    };
    WeightQuadruple::new(
        restrict(&quad.alpha)?,
        restrict(&quad.beta)?,
        restrict(&quad.gamma)?,
        restrict(&quad.delta)?,
    )
}

/// One `(F, G)` slice of a coefficient.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Slice {
    /// `F = A ∩ B`, as a subset name.
    pub lower: String,
    /// `G = A ∪ B`, as a subset name.
    pub upper: String,
    #[serde(skip)]
    pub lower_mask: u64,
    #[serde(skip)]
    pub upper_mask: u64,
    /// `None` when the slice is vacuous (`F ⊄ G` or `|F| + |G| ≠ k`).
    pub check: Option<crate::inequality::SumComparison>,
}

impl Slice {
    pub fn skipped(&self) -> bool {
        self.check.is_none()
    }
}

/// The coefficient of `q^k` in the Boolean q-analogue, checked directly and
/// through its `(F, G)` decomposition.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SliceReport {
    pub k: usize,
    /// `Σ_{|A|+|B|=k} α(A)β(B)`.
    #[serde(serialize_with = "crate::rational::serialize")]
    pub lhs: Rational,
    /// `Σ_{|C|+|D|=k} γ(C)δ(D)`.
    #[serde(serialize_with = "crate::rational::serialize")]
    pub rhs: Rational,
    /// `lhs ≤ rhs`.
    pub verdict: Verdict,
    /// Both totals equal the sums of their slices.
    pub identity: Verdict,
    pub slices: Vec<Slice>,
}

impl SliceReport {
    pub fn live_slices(&self) -> impl Iterator<Item = &Slice> {
        self.slices.iter().filter(|s| !s.skipped())
    }
}

/// Checks the coefficient of `q^k` on a Boolean carrier. Each slice with
/// `F ⊆ G` and `|F| + |G| = k` is checked as the complement-sum inequality
/// on the restriction to `[F, G]`; all other slices are vacuous.
pub fn coefficient_slice_check(quad: &WeightQuadruple, k: usize) -> Result<SliceReport> {
    let l = quad.carrier();
    let view = BooleanView::of(l)?;
    let n = view.n();
    let level_sum = |u: &WeightFunction, v: &WeightFunction| -> Rational {
        let mut total = Rational::zero();
        for a in l.elements() {
            for b in l.elements() {
                if view.size(a) + view.size(b) == k {
                    total += u.value(a) * v.value(b);
                }
            }
        }
        total
    };
    let lhs = level_sum(&quad.alpha, &quad.beta);
    let rhs = level_sum(&quad.gamma, &quad.delta);

    let mut slices = Vec::new();
    let (mut slice_lhs, mut slice_rhs) = (Rational::zero(), Rational::zero());
    for f in 0..1u64 << n {
        for g in 0..1u64 << n {
            let live = f & !g == 0 && (f.count_ones() + g.count_ones()) as usize == k;
            let check = if live {
                let restricted = interval_restriction_with(quad, &view, f, g)?;
                let c = check_q4ft_stronger(&restricted)?;
                slice_lhs += &c.lhs;
                slice_rhs += &c.rhs;
                Some(c)
            } else {
                None
            };
            slices.push(Slice {
                lower: subset_name(f),
                upper: subset_name(g),
                lower_mask: f,
                upper_mask: g,
                check,
            });
        }
    }

    let identity = if slice_lhs != lhs {
        Verdict::fail(Witness::at_index("slice-identity-lhs", k, Side::Rational(lhs.clone()), Side::Rational(slice_lhs)))
    } else if slice_rhs != rhs {
        Verdict::fail(Witness::at_index("slice-identity-rhs", k, Side::Rational(rhs.clone()), Side::Rational(slice_rhs)))
    } else {
        Verdict::pass()
    };
    let verdict = if lhs > rhs {
        Verdict::fail(Witness::at_index("coefficient", k, Side::Rational(lhs.clone()), Side::Rational(rhs.clone())))
    } else {
        Verdict::pass()
    };
    Ok(SliceReport {
        k,
        lhs,
        rhs,
        verdict,
        identity,
        slices,
    })
}

/// `(α, β′, γ′, δ)` with `β′(B) = β(Bᶜ)` and `γ′(C) = γ(Cᶜ)`.
pub fn complement_transform(quad: &WeightQuadruple) -> Result<WeightQuadruple> {
    let l = quad.carrier();
    let view = BooleanView::of(l)?;
    let flip = |w: &WeightFunction| WeightFunction::from_fn(l.clone(), |x| w.value(view.complement(x)).clone());
    WeightQuadruple::new(quad.alpha.clone(), flip(&quad.beta)?, flip(&quad.gamma)?, quad.delta.clone())
}

/// `f(A) = α(A)β(Aᶜ)` and `g(A) = γ(Aᶜ)δ(A)`.
pub fn diagonal_construction(quad: &WeightQuadruple) -> Result<(WeightFunction, WeightFunction)> {
    let l = quad.carrier();
    let view = BooleanView::of(l)?;
    let f = WeightFunction::from_fn(l.clone(), |a| quad.alpha.value(a) * quad.beta.value(view.complement(a)))?;
    let g = WeightFunction::from_fn(l.clone(), |a| quad.gamma.value(view.complement(a)) * quad.delta.value(a))?;
    Ok((f, g))
}

/// The quadruple whose four functions theorem instance is the FKG
/// inequality: `(fμ, gμ, μ, fgμ)` for decreasing `f, g` and
/// `(fμ, gμ, fgμ, μ)` for increasing ones.
pub fn fkg_quadruple(
    mu: &WeightFunction,
    f: &WeightFunction,
    g: &WeightFunction,
    direction: Direction,
) -> Result<WeightQuadruple> {
    if let Some(w) = is_log_supermodular(mu).into_witness() {
        return Err(Error::precondition("mu is not log-supermodular", Some(w)));
    }
    for (name, h) in [("f", f), ("g", g)] {
        if let Some(w) = is_monotone(h, direction).into_witness() {
            return Err(Error::precondition(format!("{name} is not {direction}"), Some(w)));
        }
    }
    let fm = f.product(mu)?;
    let gm = g.product(mu)?;
    let fgm = f.product(g)?.product(mu)?;
    match direction {
        Direction::Decreasing => WeightQuadruple::new(fm, gm, mu.clone(), fgm),
        Direction::Increasing => WeightQuadruple::new(fm, gm, fgm, mu.clone()),
    }
}

/// Direct q-analogue check next to its replay through the Birkhoff embedding
/// and per-coefficient slice decomposition.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReplayReport {
    pub direct: Q4ftReport,
    #[serde(skip)]
    pub embedding: BirkhoffEmbedding,
    /// AD hypothesis of the extended quadruple on `P(n)`.
    pub embedded_hypothesis: Verdict,
    pub slices: Vec<SliceReport>,
    /// First coefficient where the two routes disagree, if any.
    pub mismatch: Option<usize>,
}

impl ReplayReport {
    /// The two routes agree coefficient by coefficient and on the verdict,
    /// and every slice identity holds.
    pub fn agrees(&self) -> bool {
        self.mismatch.is_none()
            && self.slices.iter().all(|s| s.identity.holds())
            && self.direct.verdict.holds() == self.slices.iter().all(|s| s.verdict.holds())
    }
}

/// Runs the q-analogue check on a distributive lattice both directly and by
/// extending `α` on `X`, `β` on `Y`, `γ` on `X∨Y` and `δ` on `X∧Y` to `P(n)`
/// and checking every coefficient slice by slice.
pub fn replay_proof(
    quad: &WeightQuadruple,
    x: &FamilySelection,
    y: &FamilySelection,
) -> Result<ReplayReport> {
    let l = quad.carrier();
    let direct = check_q4ft(quad, x, y)?;
    let embedding = birkhoff_embed(l)?;
    let join = x.join_with(y, l);
    let meet = x.meet_with(y, l);
    let extended = WeightQuadruple::new(
        extend_via_embedding(&embedding, &quad.alpha, x)?,
        extend_via_embedding(&embedding, &quad.beta, y)?,
        extend_via_embedding(&embedding, &quad.gamma, &join)?,
        extend_via_embedding(&embedding, &quad.delta, &meet)?,
    )?;
    let embedded_hypothesis = check_ad_hypothesis(&extended);
    let slices = (0..=2 * embedding.n())
        .map(|k| coefficient_slice_check(&extended, k))
        .collect::<Result<Vec<_>>>()?;
    let max_degree = [direct.lhs.degree(), direct.rhs.degree()]
        .into_iter()
        .flatten()
        .max()
        .unwrap_or(0);
    let mismatch = (0..=max_degree.max(2 * embedding.n())).find(|&k| match slices.get(k) {
        Some(s) => s.lhs != direct.lhs.coeff(k) || s.rhs != direct.rhs.coeff(k),
        None => !direct.lhs.coeff(k).is_zero() || !direct.rhs.coeff(k).is_zero(),
    });
    Ok(ReplayReport {
        direct,
        embedding,
        embedded_hypothesis,
        slices,
        mismatch,
    })
}

/// Shared `P(n)` carrier, re-exported for callers building Boolean
/// instances.
pub fn boolean_carrier(n: usize) -> Result<Arc<crate::lattice::Lattice>> {
    Ok(shared_boolean(n)?.0)
}
