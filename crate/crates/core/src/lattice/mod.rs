//! Finite posets and lattices built from cover relations.
//!
//! Elements are identified by opaque string ids and addressed internally by
//! their position in the input order. That order is kept for the lifetime of
//! the lattice and drives deterministic witness selection: every scan visits
//! pairs and triples lexicographically by element index.

mod standard;

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, HashMap};
use std::sync::OnceLock;

use crate::error::{BoundKind, Error, Result};
use crate::verdict::{Side, Verdict, Witness};

pub use standard::{
    boolean, chain, divisor, product, standard_lattice, subset_name, subsets_in_rank_lex_order,
    StandardSpec, MAX_BOOLEAN_N,
};

/// A finite partial order given by its irredundant cover relation.
#[derive(Clone, Debug)]
pub struct Poset {
    names: Vec<String>,
    index: HashMap<String, usize>,
    covers: Vec<(usize, usize)>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    leq: Vec<bool>,
}

impl Poset {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Irredundant covers `(lower, upper)`, sorted by index.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }
}

/// A finite lattice with dense meet and join tables.
#[derive(Clone, Debug)]
pub struct Lattice {
    poset: Poset,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
    ranks: Vec<usize>,
    redundant: Vec<(usize, usize)>,
    distributive: OnceLock<Verdict>,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.poset.names == other.poset.names && self.poset.covers == other.poset.covers
    }
}

impl Eq for Lattice {}

impl Lattice {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    /// Element indices in input order.
    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn name(&self, x: usize) -> &str {
        self.poset.name(x)
    }

    pub fn names(&self) -> &[String] {
        self.poset.names()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.poset.index_of(name)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.poset.lt(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn rank(&self, x: usize) -> usize {
        self.ranks[x]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        self.poset.covers()
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        self.poset.lower_covers(x)
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        self.poset.upper_covers(x)
    }

    /// Input covers that were implied by transitivity and dropped.
    pub fn redundant_covers(&self) -> &[(usize, usize)] {
        &self.redundant
    }

    /// Distributivity verdict, computed once and cached.
    pub fn distributivity(&self) -> &Verdict {
        self.distributive.get_or_init(|| scan_distributive(self))
    }

    pub fn require_distributive(&self) -> Result<()> {
        match self.distributivity().witness() {
            None => Ok(()),
            Some(w) => Err(Error::NotDistributive(Some(Box::new(w.clone())))),
        }
    }
}

/// Builds a lattice from element ids and cover pairs `(lower, upper)`.
///
/// Redundant covers (implied by transitivity) are accepted and recorded in
/// [`Lattice::redundant_covers`].
pub fn build_lattice<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Lattice> {
    if elements.is_empty() {
        return Err(Error::Empty);
    }
    let mut names = Vec::with_capacity(elements.len());
    let mut index = HashMap::with_capacity(elements.len());
    for e in elements {
        let e = e.as_ref();
        if e.is_empty() || e.chars().any(char::is_whitespace) {
            return Err(Error::Param(format!(
                "element id `{e}` must be non-empty without whitespace"
            )));
        }
        if index.insert(e.to_string(), names.len()).is_some() {
            return Err(Error::DuplicateElement(e.to_string()));
        }
        names.push(e.to_string());
    }
    let n = names.len();

    let mut edges = BTreeSet::new();
    for (lo, hi) in covers {
        let (lo, hi) = (lo.as_ref(), hi.as_ref());
        let lookup = |x: &str| {
            index.get(x).copied().ok_or_else(|| Error::UnknownElement {
                lower: lo.to_string(),
                upper: hi.to_string(),
                unknown: x.to_string(),
            })
        };
        let (a, b) = (lookup(lo)?, lookup(hi)?);
        if a == b {
            return Err(Error::Cycle(lo.to_string()));
        }
        edges.insert((a, b));
    }

    let mut succ = vec![Vec::new(); n];
    let mut pred = vec![Vec::new(); n];
    for &(a, b) in &edges {
        succ[a].push(b);
        pred[b].push(a);
    }
    let order = topological_order(&succ, &pred).map_err(|x| Error::Cycle(names[x].clone()))?;

    let mut leq = vec![false; n * n];
    for &x in &order {
        leq[x * n + x] = true;
        for &p in &pred[x] {
            for z in 0..n {
                if leq[z * n + p] {
                    leq[z * n + x] = true;
                }
            }
        }
    }

    let mut cover_list = Vec::new();
    let mut redundant = Vec::new();
    for &(a, b) in &edges {
        let implied = (0..n).any(|c| c != a && c != b && leq[a * n + c] && leq[c * n + b]);
        if implied {
            redundant.push((a, b));
        } else {
            cover_list.push((a, b));
        }
    }
    let mut lower = vec![Vec::new(); n];
    let mut upper = vec![Vec::new(); n];
    for &(a, b) in &cover_list {
        upper[a].push(b);
        lower[b].push(a);
    }

    let poset = Poset {
        names,
        index,
        covers: cover_list,
        lower,
        upper,
        leq,
    };

    let (join, meet) = match bound_tables(&poset, &order) {
        Some(tables) => tables,
        None => return Err(first_non_lattice_pair(&poset)),
    };

    let mut ranks = vec![0; n];
    for &x in &order {
        ranks[x] = poset.lower[x]
            .iter()
            .map(|&c| ranks[c] + 1)
            .max()
            .unwrap_or(0);
    }
    let bottom = (1..n).fold(0, |acc, x| meet[acc * n + x]);
    let top = (1..n).fold(0, |acc, x| join[acc * n + x]);

    Ok(Lattice {
        poset,
        join,
        meet,
        bottom,
        top,
        ranks,
        redundant,
        distributive: OnceLock::new(),
    })
}

/// Kahn's algorithm, smallest index first. On failure returns an element
/// lying on a cycle.
fn topological_order(succ: &[Vec<usize>], pred: &[Vec<usize>]) -> std::result::Result<Vec<usize>, usize> {
    let n = succ.len();
    let mut indeg: Vec<usize> = pred.iter().map(Vec::len).collect();
    let mut heap: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&x| indeg[x] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(x)) = heap.pop() {
        order.push(x);
        for &y in &succ[x] {
            indeg[y] -= 1;
            if indeg[y] == 0 {
                heap.push(Reverse(y));
            }
        }
    }
    if order.len() == n {
        return Ok(order);
    }
    // Every leftover element has a leftover predecessor; walking backwards
    // must revisit something, and the first repeat lies on a cycle.
    let start = (0..n).find(|&x| indeg[x] > 0).expect("leftover element");
    let mut seen = vec![false; n];
    let mut x = start;
    while !seen[x] {
        seen[x] = true;
        x = *pred[x]
            .iter()
            .find(|&&p| indeg[p] > 0)
            .expect("leftover predecessor");
    }
    Err(x)
}

/// Join and meet tables, or `None` if some pair lacks a least upper or
/// greatest lower bound.
///
/// For incomparable `x, y` the join is the least of `u ∨ y` over the upper
/// covers `u` of `x`, so filling the table in reverse topological order only
/// ever consults finished rows. Meets are dual.
fn bound_tables(p: &Poset, order: &[usize]) -> Option<(Vec<usize>, Vec<usize>)> {
    let join = fill_bound_table(p, order.iter().rev(), BoundKind::Join)?;
    let meet = fill_bound_table(p, order.iter(), BoundKind::Meet)?;
    Some((join, meet))
}

fn fill_bound_table<'a>(
    p: &Poset,
    seq: impl Iterator<Item = &'a usize>,
    kind: BoundKind,
) -> Option<Vec<usize>> {
    const UNSET: usize = usize::MAX;
    let n = p.len();
    // `below(a, b)`: a is on the near side of b for this bound
    let below = |a: usize, b: usize| match kind {
        BoundKind::Join => p.leq(a, b),
        BoundKind::Meet => p.leq(b, a),
    };
    let mut table = vec![UNSET; n * n];
    let mut cands = Vec::new();
    for &x in seq {
        let steps = match kind {
            BoundKind::Join => p.upper_covers(x),
            BoundKind::Meet => p.lower_covers(x),
        };
        for y in 0..n {
            let v = if below(x, y) {
                y
            } else if below(y, x) {
                x
            } else {
                cands.clear();
                cands.extend(steps.iter().map(|&u| table[u * n + y]));
                if cands.contains(&UNSET) {
                    return None;
                }
                *cands.iter().find(|&&c| cands.iter().all(|&d| below(c, d)))?
            };
            table[x * n + y] = v;
        }
    }
    Some(table)
}

fn first_non_lattice_pair(p: &Poset) -> Error {
    let n = p.len();
    for a in 0..n {
        for b in a + 1..n {
            for kind in [BoundKind::Join, BoundKind::Meet] {
                let bound = |z: usize| match kind {
                    BoundKind::Join => p.leq(a, z) && p.leq(b, z),
                    BoundKind::Meet => p.leq(z, a) && p.leq(z, b),
                };
                let inner = |z: usize, w: usize| match kind {
                    BoundKind::Join => p.lt(w, z),
                    BoundKind::Meet => p.lt(z, w),
                };
                let bounds: Vec<usize> = (0..n).filter(|&z| bound(z)).collect();
                let extremal: Vec<usize> = bounds
                    .iter()
                    .copied()
                    .filter(|&z| !bounds.iter().any(|&w| inner(z, w)))
                    .collect();
                if extremal.len() != 1 {
                    return Error::NotALattice {
                        a: p.name(a).to_string(),
                        b: p.name(b).to_string(),
                        kind,
                        candidates: extremal.iter().map(|&z| p.name(z).to_string()).collect(),
                    };
                }
            }
        }
    }
    unreachable!("bound tables failed but every pair has unique bounds")
}

fn scan_distributive(l: &Lattice) -> Verdict {
    for x in l.elements() {
        for y in l.elements() {
            for z in l.elements() {
                let lhs = l.meet(x, l.join(y, z));
                let rhs = l.join(l.meet(x, y), l.meet(x, z));
                if lhs != rhs {
                    return Verdict::fail(Witness::new(
                        "distributive",
                        &[("x", l.name(x)), ("y", l.name(y)), ("z", l.name(z))],
                        Side::Element(l.name(lhs).to_string()),
                        Side::Element(l.name(rhs).to_string()),
                    ));
                }
            }
        }
    }
    Verdict::pass()
}

/// Checks `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` over all ordered triples.
pub fn is_distributive(l: &Lattice) -> Verdict {
    l.distributivity().clone()
}

/// Length of the longest chain ending at each element, indexed by element.
pub fn rank_function(l: &Lattice) -> Vec<usize> {
    l.ranks().to_vec()
}

/// Checks `r(x) + r(y) = r(x ∨ y) + r(x ∧ y)` over all ordered pairs.
pub fn check_rank_modularity(l: &Lattice) -> Verdict {
    for x in l.elements() {
        for y in l.elements() {
            let (j, m) = (l.join(x, y), l.meet(x, y));
            let lhs = l.rank(x) + l.rank(y);
            let rhs = l.rank(j) + l.rank(m);
            if lhs != rhs {
                let ranks = [l.rank(x), l.rank(y), l.rank(j), l.rank(m)].map(|r| r.to_string());
                return Verdict::fail(Witness::new(
                    "rank-modularity",
                    &[
                        ("x", l.name(x)),
                        ("y", l.name(y)),
                        ("r(x)", &ranks[0]),
                        ("r(y)", &ranks[1]),
                        ("r(x∨y)", &ranks[2]),
                        ("r(x∧y)", &ranks[3]),
                    ],
                    Side::Natural(lhs),
                    Side::Natural(rhs),
                ));
            }
        }
    }
    Verdict::pass()
}
