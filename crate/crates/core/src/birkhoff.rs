//! Join-irreducibles and the Birkhoff embedding `φ(a) = {i : x_i ≤ a}` of a
//! finite distributive lattice into the subsets of `[n]`, where `x_1, …, x_n`
//! are the join-irreducible elements.

use serde::Serialize;

use crate::error::Result;
use crate::lattice::Lattice;
use crate::verdict::{Side, Verdict, Witness};

/// Join-irreducibles in a linear extension of the lattice order, together
/// with the image of every element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BirkhoffEmbedding {
    /// Element indices `x_1, …, x_n`.
    pub irreducibles: Vec<usize>,
    /// `image[a]` is the sorted list of 1-based indices `i` with `x_i ≤ a`.
    pub image: Vec<Vec<usize>>,
}

impl BirkhoffEmbedding {
    /// Number of join-irreducibles, i.e. the size of the ground set.
    pub fn n(&self) -> usize {
        self.irreducibles.len()
    }

    /// Image of `a` as a bitmask (bit `i-1` for index `i`). Requires `n ≤ 64`.
    pub fn mask(&self, a: usize) -> u64 {
        self.image[a].iter().fold(0, |m, &i| m | 1 << (i - 1))
    }
}

/// `x` is join-irreducible: not the bottom, and `a ∨ b < x` whenever
/// `a < x` and `b < x`.
pub fn is_join_irreducible(l: &Lattice, x: usize) -> bool {
    if x == l.bottom() {
        return false;
    }
    let below: Vec<usize> = l.elements().filter(|&a| l.lt(a, x)).collect();
    below
        .iter()
        .all(|&a| below.iter().all(|&b| l.lt(l.join(a, b), x)))
}

/// Cover characterization: exactly one lower cover.
pub fn has_single_lower_cover(l: &Lattice, x: usize) -> bool {
    l.lower_covers(x).len() == 1
}

/// Join-irreducible elements ordered by rank, then input order.
pub fn join_irreducibles(l: &Lattice) -> Vec<usize> {
    let mut out: Vec<usize> = l
        .elements()
        .filter(|&x| {
            let irreducible = is_join_irreducible(l, x);
            debug_assert_eq!(irreducible, has_single_lower_cover(l, x));
            irreducible
        })
        .collect();
    out.sort_by_key(|&x| (l.rank(x), x));
    out
}

/// Embeds a distributive lattice; refuses non-distributive ones.
pub fn birkhoff_embed(l: &Lattice) -> Result<BirkhoffEmbedding> {
    l.require_distributive()?;
    let irreducibles = join_irreducibles(l);
    let image = l
        .elements()
        .map(|a| {
            irreducibles
                .iter()
                .enumerate()
                .filter(|&(_, &x)| l.leq(x, a))
                .map(|(i, _)| i + 1)
                .collect()
        })
        .collect();
    Ok(BirkhoffEmbedding {
        irreducibles,
        image,
    })
}

fn sorted_union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = a.iter().chain(b).copied().collect();
    v.sort_unstable();
    v.dedup();
    v
}

fn sorted_intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.contains(x)).collect()
}

/// Checks injectivity, `φ(a∧b) = φ(a)∩φ(b)`, `φ(a∨b) = φ(a)∪φ(b)` and
/// `r(a) = |φ(a)|`, in that order.
pub fn verify_embedding(l: &Lattice, emb: &BirkhoffEmbedding) -> Verdict {
    let n = emb.n();
    if emb.image.len() != l.len() {
        return Verdict::fail(Witness::new(
            "shape",
            &[],
            Side::Natural(emb.image.len()),
            Side::Natural(l.len()),
        ));
    }
    for a in l.elements() {
        let img = &emb.image[a];
        let ordered = img.windows(2).all(|w| w[0] < w[1]);
        if !ordered || img.iter().any(|&i| i == 0 || i > n) {
            return Verdict::fail(Witness::new(
                "shape",
                &[("a", l.name(a))],
                Side::Indices(img.clone()),
                Side::Natural(n),
            ));
        }
    }
    let pair = |a: usize, b: usize| [("a", l.name(a)), ("b", l.name(b))];
    for a in l.elements() {
        for b in a + 1..l.len() {
            if emb.image[a] == emb.image[b] {
                return Verdict::fail(Witness::new(
                    "injective",
                    &pair(a, b),
                    Side::Indices(emb.image[a].clone()),
                    Side::Indices(emb.image[b].clone()),
                ));
            }
        }
    }
    for a in l.elements() {
        for b in l.elements() {
            let lhs = &emb.image[l.meet(a, b)];
            let rhs = sorted_intersection(&emb.image[a], &emb.image[b]);
            if *lhs != rhs {
                return Verdict::fail(Witness::new(
                    "meet",
                    &pair(a, b),
                    Side::Indices(lhs.clone()),
                    Side::Indices(rhs),
                ));
            }
        }
    }
    for a in l.elements() {
        for b in l.elements() {
            let lhs = &emb.image[l.join(a, b)];
            let rhs = sorted_union(&emb.image[a], &emb.image[b]);
            if *lhs != rhs {
                return Verdict::fail(Witness::new(
                    "join",
                    &pair(a, b),
                    Side::Indices(lhs.clone()),
                    Side::Indices(rhs),
                ));
            }
        }
    }
    for a in l.elements() {
        if l.rank(a) != emb.image[a].len() {
            return Verdict::fail(Witness::new(
                "rank",
                &[("a", l.name(a))],
                Side::Natural(l.rank(a)),
                Side::Natural(emb.image[a].len()),
            ));
        }
    }
    Verdict::pass()
}
