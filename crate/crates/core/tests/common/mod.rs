#![allow(dead_code)]

use std::sync::Arc;

use qfkg_core::lattice::{boolean, build_lattice, chain, divisor, product};
use qfkg_core::rng::SeededRng;
use qfkg_core::Lattice;

/// Distributive lattices used across the property suites.
pub fn distributive_catalog() -> Vec<(String, Arc<Lattice>)> {
    let mut out: Vec<(String, Lattice)> = Vec::new();
    for m in 1..=8 {
        out.push((format!("chain:{m}"), chain(m).unwrap()));
    }
    for n in 0..=4 {
        out.push((format!("boolean:{n}"), boolean(n).unwrap()));
    }
    for m in [12, 36, 60] {
        out.push((format!("divisor:{m}"), divisor(m).unwrap()));
    }
    for a in 2..=4 {
        for b in 2..=4 {
            out.push((format!("chain:{a}*chain:{b}"), product(&chain(a).unwrap(), &chain(b).unwrap())));
        }
    }
    out.into_iter().map(|(k, l)| (k, Arc::new(l))).collect()
}

pub fn m3() -> Lattice {
    build_lattice(
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
    )
    .unwrap()
}

pub fn n5() -> Lattice {
    build_lattice(
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
    )
    .unwrap()
}

fn set_name(mask: u32) -> String {
    format!("s{mask}")
}

/// Lattice of a random intersection-closed family of subsets of `[n]`
/// (always containing the full set), ordered by inclusion. Usually not
/// distributive.
pub fn random_closure_lattice(n: u32, seed: u64) -> Lattice {
    let mut rng = SeededRng::new(seed);
    let full = (1u32 << n) - 1;
    let mut family: Vec<u32> = vec![full];
    for _ in 0..rng.below(2 * n as usize + 2) {
        family.push(rng.next_u64() as u32 & full);
    }
    family.sort_unstable();
    family.dedup();
    loop {
        let mut grown = family.clone();
        for &a in &family {
            for &b in &family {
                grown.push(a & b);
            }
        }
        grown.sort_unstable();
        grown.dedup();
        if grown.len() == family.len() {
            break;
        }
        family = grown;
    }
    let names: Vec<String> = family.iter().map(|&m| set_name(m)).collect();
    let mut covers = Vec::new();
    for &a in &family {
        for &b in &family {
            let strict = a != b && a & b == a;
            let direct = strict
                && !family
                    .iter()
                    .any(|&c| c != a && c != b && a & c == a && c & b == c);
            if direct {
                covers.push((set_name(a), set_name(b)));
            }
        }
    }
    build_lattice(&names, &covers).expect("closure systems are lattices")
}

/// Lattice of a random union- and intersection-closed family of subsets
/// (a sublattice of a Boolean lattice), hence distributive.
pub fn random_ring_of_sets(n: u32, seed: u64) -> Lattice {
    let mut rng = SeededRng::new(seed);
    let full = (1u32 << n) - 1;
    let mut family: Vec<u32> = vec![0, full];
    for _ in 0..rng.below(n as usize + 2) {
        family.push(rng.next_u64() as u32 & full);
    }
    family.sort_unstable();
    family.dedup();
    loop {
        let mut grown = family.clone();
        for &a in &family {
            for &b in &family {
                grown.push(a & b);
                grown.push(a | b);
            }
        }
        grown.sort_unstable();
        grown.dedup();
        if grown.len() == family.len() {
            break;
        }
        family = grown;
    }
    let names: Vec<String> = family.iter().map(|&m| set_name(m)).collect();
    let mut covers = Vec::new();
    for &a in &family {
        for &b in &family {
            if a != b && a & b == a {
                covers.push((set_name(a), set_name(b)));
            }
        }
    }
    // all comparable pairs are given; build_lattice reduces them
    build_lattice(&names, &covers).expect("rings of sets are lattices")
}
