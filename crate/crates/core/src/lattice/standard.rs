//! Catalog lattices: Boolean lattices, chains, divisor lattices and products.

use std::fmt;
use std::str::FromStr;

use super::{build_lattice, Lattice};
use crate::error::{Error, Result};

/// Largest ground set for which a Boolean lattice is materialized.
pub const MAX_BOOLEAN_N: usize = 10;
const MAX_DIVISOR_M: u64 = 1_000_000_000_000;

/// Name of a catalog lattice, parsed from `boolean:N`, `chain:M`,
/// `divisor:M` or `A*B` for products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StandardSpec {
    Boolean(usize),
    Chain(usize),
    Divisor(u64),
    Product(Box<StandardSpec>, Box<StandardSpec>),
}

impl FromStr for StandardSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((a, b)) = s.rsplit_once('*') {
            return Ok(StandardSpec::Product(Box::new(a.parse()?), Box::new(b.parse()?)));
        }
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::Param(format!("expected KIND:N, got `{s}`")))?;
        let bad = || Error::Param(format!("invalid parameter in `{s}`"));
        match kind {
            "boolean" => Ok(StandardSpec::Boolean(arg.parse().map_err(|_| bad())?)),
            "chain" => Ok(StandardSpec::Chain(arg.parse().map_err(|_| bad())?)),
            "divisor" => Ok(StandardSpec::Divisor(arg.parse().map_err(|_| bad())?)),
            _ => Err(Error::Param(format!("unknown lattice kind `{kind}`"))),
        }
    }
}

impl fmt::Display for StandardSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StandardSpec::Boolean(n) => write!(f, "boolean:{n}"),
            StandardSpec::Chain(m) => write!(f, "chain:{m}"),
            StandardSpec::Divisor(m) => write!(f, "divisor:{m}"),
            StandardSpec::Product(a, b) => write!(f, "{a}*{b}"),
        }
    }
}

pub fn standard_lattice(spec: &StandardSpec) -> Result<Lattice> {
    match spec {
        StandardSpec::Boolean(n) => boolean(*n),
        StandardSpec::Chain(m) => chain(*m),
        StandardSpec::Divisor(m) => divisor(*m),
        StandardSpec::Product(a, b) => Ok(product(&standard_lattice(a)?, &standard_lattice(b)?)),
    }
}

/// Name of a subset of `[n]` given as a bitmask: `{}`, `{1}`, `{1,3}`.
pub fn subset_name(mask: u64) -> String {
    let items: Vec<String> = (0..64)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect();
    format!("{{{}}}", items.join(","))
}

/// Subsets of `[n]` as bitmasks, ordered by size and then lexicographically
/// by their sorted element lists.
pub fn subsets_in_rank_lex_order(n: usize) -> Vec<u64> {
    let mut masks: Vec<u64> = (0..1u64 << n).collect();
    let key = |m: &u64| -> (u32, Vec<u32>) {
        (m.count_ones(), (0..n as u32).filter(|i| m >> i & 1 == 1).collect())
    };
    masks.sort_by_key(key);
    masks
}

/// The Boolean lattice `P(n)` ordered by inclusion. Elements are named
/// `{}`, `{1}`, `{2}`, …, `{1,2}`, … in size-then-lex order.
pub fn boolean(n: usize) -> Result<Lattice> {
    if n > MAX_BOOLEAN_N {
        return Err(Error::Param(format!(
            "boolean lattice size n={n} exceeds {MAX_BOOLEAN_N}"
        )));
    }
    let masks = subsets_in_rank_lex_order(n);
    let names: Vec<String> = masks.iter().map(|&m| subset_name(m)).collect();
    let mut covers = Vec::new();
    for &m in &masks {
        for i in 0..n {
            if m >> i & 1 == 0 {
                covers.push((subset_name(m), subset_name(m | 1 << i)));
            }
        }
    }
    build_lattice(&names, &covers)
}

/// A chain with `m` elements named `0`, `1`, …, `m-1`.
pub fn chain(m: usize) -> Result<Lattice> {
    if m == 0 {
        return Err(Error::Param("a chain needs at least one element".into()));
    }
    let names: Vec<String> = (0..m).map(|i| i.to_string()).collect();
    let covers: Vec<(String, String)> = (1..m)
        .map(|i| ((i - 1).to_string(), i.to_string()))
        .collect();
    build_lattice(&names, &covers)
}

/// Divisors of `m` ordered by divisibility (join = lcm, meet = gcd).
pub fn divisor(m: u64) -> Result<Lattice> {
    if m == 0 || m > MAX_DIVISOR_M {
        return Err(Error::Param(format!(
            "divisor lattice needs 1 <= m <= {MAX_DIVISOR_M}, got {m}"
        )));
    }
    let mut divs: Vec<u64> = (1..)
        .take_while(|d| d * d <= m)
        .filter(|d| m.is_multiple_of(*d))
        .flat_map(|d| [d, m / d])
        .collect();
    divs.sort_unstable();
    divs.dedup();
    let primes: Vec<u64> = divs
        .iter()
        .copied()
        .filter(|&p| p > 1 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0))
        .collect();
    let names: Vec<String> = divs.iter().map(u64::to_string).collect();
    let mut covers = Vec::new();
    for &d in &divs {
        for &p in &primes {
            if (m / d).is_multiple_of(p) {
                covers.push((d.to_string(), (d * p).to_string()));
            }
        }
    }
    build_lattice(&names, &covers)
}

/// Coordinatewise product; elements are named `(x,y)` in row-major order.
pub fn product(a: &Lattice, b: &Lattice) -> Lattice {
    let pair = |x: usize, y: usize| format!("({},{})", a.name(x), b.name(y));
    let mut names = Vec::with_capacity(a.len() * b.len());
    for x in a.elements() {
        for y in b.elements() {
            names.push(pair(x, y));
        }
    }
    let mut covers = Vec::new();
    for x in a.elements() {
        for y in b.elements() {
            for &u in a.upper_covers(x) {
                covers.push((pair(x, y), pair(u, y)));
            }
            for &v in b.upper_covers(y) {
                covers.push((pair(x, y), pair(x, v)));
            }
        }
    }
    build_lattice(&names, &covers).expect("product of lattices is a lattice")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_two() {
        let l = boolean(2).unwrap();
        assert_eq!(l.names(), &["{}", "{1}", "{2}", "{1,2}"]);
        assert_eq!(l.ranks(), &[0, 1, 1, 2]);
        assert_eq!(boolean(0).unwrap().len(), 1);
        assert!(boolean(MAX_BOOLEAN_N + 1).is_err());
    }

    #[test]
    fn boolean_three_order() {
        let l = boolean(3).unwrap();
        assert_eq!(
            l.names(),
            &["{}", "{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}"]
        );
    }

    #[test]
    fn divisor_twelve() {
        let l = divisor(12).unwrap();
        assert_eq!(l.names(), &["1", "2", "3", "4", "6", "12"]);
        let ix = |s| l.index_of(s).unwrap();
        assert_eq!(l.join(ix("4"), ix("6")), ix("12"));
        assert_eq!(l.meet(ix("4"), ix("6")), ix("2"));
        let r: Vec<usize> = ["1", "2", "3", "4", "6", "12"].iter().map(|s| l.rank(ix(s))).collect();
        assert_eq!(r, vec![0, 1, 1, 2, 2, 3]);
    }

    #[test]
    fn chain_ranks() {
        let l = chain(4).unwrap();
        assert_eq!(l.ranks(), &[0, 1, 2, 3]);
        assert!(chain(0).is_err());
        assert!(divisor(0).is_err());
    }

    #[test]
    fn spec_round_trip() {
        for s in ["boolean:3", "chain:5", "divisor:36", "chain:3*chain:3", "chain:2*chain:2*chain:2"] {
            let spec: StandardSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("torus:3".parse::<StandardSpec>().is_err());
        assert!("boolean:x".parse::<StandardSpec>().is_err());
        assert_eq!(
            standard_lattice(&"chain:2*chain:2*chain:2".parse().unwrap()).unwrap().len(),
            8
        );
    }
}
