mod common;

use common::*;
use proptest::prelude::*;
use qfkg_core::birkhoff::{has_single_lower_cover, is_join_irreducible};
use qfkg_core::lattice::{boolean, chain, divisor, product};
use qfkg_core::{
    birkhoff_embed, check_rank_modularity, is_distributive, join_irreducibles, rank_function,
    verify_embedding, Lattice,
};

/// Least upper bound recomputed from the order relation alone.
fn brute_join(l: &Lattice, a: usize, b: usize) -> usize {
    let ubs: Vec<usize> = l.elements().filter(|&z| l.leq(a, z) && l.leq(b, z)).collect();
    let least: Vec<usize> = ubs.iter().copied().filter(|&z| ubs.iter().all(|&u| l.leq(z, u))).collect();
    assert_eq!(least.len(), 1);
    least[0]
}

fn brute_meet(l: &Lattice, a: usize, b: usize) -> usize {
    let lbs: Vec<usize> = l.elements().filter(|&z| l.leq(z, a) && l.leq(z, b)).collect();
    let greatest: Vec<usize> = lbs.iter().copied().filter(|&z| lbs.iter().all(|&u| l.leq(u, z))).collect();
    assert_eq!(greatest.len(), 1);
    greatest[0]
}

/// Longest chain ending at `x`, by exhaustive depth-first enumeration of
/// strictly increasing chains in the order relation.
fn brute_rank(l: &Lattice, x: usize) -> usize {
    l.elements()
        .filter(|&y| l.lt(y, x))
        .map(|y| brute_rank(l, y) + 1)
        .max()
        .unwrap_or(0)
}

fn check_lattice_laws(l: &Lattice) {
    for a in l.elements() {
        for b in l.elements() {
            assert_eq!(l.join(a, b), brute_join(l, a, b));
            assert_eq!(l.meet(a, b), brute_meet(l, a, b));
            assert_eq!(l.meet(a, l.join(a, b)), a);
            assert_eq!(l.join(a, l.meet(a, b)), a);
        }
        assert_eq!(l.rank(a), brute_rank(l, a));
        for &u in l.upper_covers(a) {
            assert!(l.rank(a) < l.rank(u));
        }
        assert_eq!(is_join_irreducible(l, a), has_single_lower_cover(l, a));
    }
    assert_eq!(l.rank(l.bottom()), 0);
}

#[test]
fn catalog_tables_match_brute_force() {
    for (name, l) in distributive_catalog() {
        if l.len() > 20 {
            continue;
        }
        check_lattice_laws(&l);
        assert!(is_distributive(&l).holds(), "{name}");
        assert!(check_rank_modularity(&l).holds(), "{name}");
    }
    for l in [m3(), n5()] {
        check_lattice_laws(&l);
    }
}

#[test]
fn boolean_rank_is_cardinality() {
    for n in 0..=4 {
        let l = boolean(n).unwrap();
        let ranks = rank_function(&l);
        for x in l.elements() {
            let size = l.name(x).matches(|c: char| c.is_ascii_digit()).count();
            assert_eq!(ranks[x], size);
        }
    }
}

#[test]
fn divisor_twelve_is_modular_on_all_pairs() {
    let l = divisor(12).unwrap();
    let mut pairs = 0;
    for x in l.elements() {
        for y in l.elements() {
            assert_eq!(l.rank(x) + l.rank(y), l.rank(l.join(x, y)) + l.rank(l.meet(x, y)));
            pairs += 1;
        }
    }
    assert_eq!(pairs, 36);
}

#[test]
fn square_of_chains_is_boolean_two() {
    let sq = product(&chain(2).unwrap(), &chain(2).unwrap());
    let b2 = boolean(2).unwrap();
    // (0,0)->{}, (0,1)->{2}, (1,0)->{1}, (1,1)->{1,2}
    let map = |x: usize| -> usize {
        let name = match sq.name(x) {
            "(0,0)" => "{}",
            "(0,1)" => "{2}",
            "(1,0)" => "{1}",
            "(1,1)" => "{1,2}",
            other => panic!("{other}"),
        };
        b2.index_of(name).unwrap()
    };
    for a in sq.elements() {
        for b in sq.elements() {
            assert_eq!(map(sq.join(a, b)), b2.join(map(a), map(b)));
            assert_eq!(map(sq.meet(a, b)), b2.meet(map(a), map(b)));
        }
    }
}

#[test]
fn boolean_embedding_is_an_isomorphism() {
    for n in 0..=4 {
        let l = boolean(n).unwrap();
        let emb = birkhoff_embed(&l).unwrap();
        assert_eq!(emb.n(), n);
        for x in l.elements() {
            let digits: Vec<usize> = l
                .name(x)
                .trim_matches(|c| c == '{' || c == '}')
                .split(',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse().unwrap())
                .collect();
            assert_eq!(emb.image[x], digits);
        }
        assert!(verify_embedding(&l, &emb).holds());
    }
}

#[test]
fn irreducibles_respect_the_order() {
    for (_, l) in distributive_catalog() {
        let xs = join_irreducibles(&l);
        for (i, &a) in xs.iter().enumerate() {
            for &b in &xs[..i] {
                assert!(!l.lt(a, b));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_lattices_satisfy_lattice_laws(n in 1u32..5, seed in any::<u64>()) {
        let l = random_closure_lattice(n, seed);
        check_lattice_laws(&l);
        // distributive lattices are rank-modular; the converse is not claimed
        if is_distributive(&l).holds() {
            prop_assert!(check_rank_modularity(&l).holds());
            prop_assert!(verify_embedding(&l, &birkhoff_embed(&l).unwrap()).holds());
        }
    }

    #[test]
    fn rings_of_sets_embed(n in 1u32..6, seed in any::<u64>()) {
        let l = random_ring_of_sets(n, seed);
        prop_assert!(is_distributive(&l).holds());
        let emb = birkhoff_embed(&l).unwrap();
        prop_assert!(verify_embedding(&l, &emb).holds());
        for x in l.elements() {
            prop_assert_eq!(emb.image[x].len(), l.rank(x));
        }
    }

    #[test]
    fn products_of_chains_embed(a in 1usize..6, b in 1usize..6, c in 1usize..4) {
        let l = product(&product(&chain(a).unwrap(), &chain(b).unwrap()), &chain(c).unwrap());
        let emb = birkhoff_embed(&l).unwrap();
        prop_assert_eq!(emb.n(), a + b + c - 3);
        prop_assert!(verify_embedding(&l, &emb).holds());
    }

    #[test]
    fn embedding_mutations_are_caught(seed in any::<u64>(), i in 0usize..64, j in 0usize..64) {
        let l = random_ring_of_sets(4, seed);
        let emb = birkhoff_embed(&l).unwrap();
        let (i, j) = (i % l.len(), j % l.len());
        prop_assume!(i != j);
        // a swap within one rank can be an automorphism, so swap across ranks
        if emb.image[i].len() != emb.image[j].len() {
            let mut swapped = emb.clone();
            swapped.image.swap(i, j);
            prop_assert!(!verify_embedding(&l, &swapped).holds());
        }
        let mut merged = emb.clone();
        merged.image[i] = emb.image[j].clone();
        prop_assert!(!verify_embedding(&l, &merged).holds());
    }
}
