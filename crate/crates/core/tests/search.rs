use qfkg_core::rational::int;
use qfkg_core::search::{
    check_conjecture9, counterexample_table, reverify, run_search, search_counterexamples, SearchConfig,
    SearchMode,
};
use qfkg_core::{check_ad_hypothesis, check_q4ft_stronger, Error};

fn cfg(n: usize, grid: &[i64], mode: SearchMode, seed: u64, limit: u64) -> SearchConfig {
    SearchConfig {
        n,
        grid: grid.iter().map(|&v| int(v)).collect(),
        mode,
        seed,
        limit,
    }
}

fn digits(c: &qfkg_core::search::Counterexample) -> Vec<i64> {
    c.quad
        .functions()
        .iter()
        .flat_map(|w| w.values().iter().map(|v| v.to_integer().try_into().unwrap()))
        .collect()
}

#[test]
fn binary_grid_on_two_points() {
    let found = search_counterexamples(&cfg(2, &[0, 1], SearchMode::Exhaustive, 0, 1 << 16)).unwrap();
    assert_eq!(found.len(), 256);
    let summary = run_search(&cfg(2, &[0, 1], SearchMode::Exhaustive, 0, 1 << 16), |_| {}).unwrap();
    assert_eq!((summary.examined, summary.admissible), (65536, 11697));
    let indices: Vec<u64> = found.iter().map(|c| c.index).collect();
    assert!(indices.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(&indices[..3], &[9240, 9241, 9242]);
    assert_eq!(*indices.last().unwrap(), 62685);
    assert_eq!(digits(&found[0]), vec![0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0]);
    assert_eq!(digits(&found[2]), vec![0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0]);

    let table = counterexample_table();
    let pos = found.iter().position(|c| c.quad == table).unwrap();
    assert_eq!(pos, 72);
    assert_eq!(found[pos].index, 11834);

    for c in &found {
        assert!(check_ad_hypothesis(&c.quad).holds());
        assert!(!check_conjecture9(&c.quad).holds());
        assert!(check_q4ft_stronger(&c.quad).unwrap().verdict.holds());
        assert_eq!(reverify(&c.quad).unwrap(), c.witness);
    }
}

#[test]
fn one_point_has_no_counterexamples() {
    let summary = run_search(&cfg(1, &[0, 1, 2], SearchMode::Exhaustive, 0, 1 << 16), |_| {}).unwrap();
    assert_eq!(summary.examined, 6561);
    assert_eq!(summary.admissible, 2290);
    assert!(summary.found.is_empty());
}

#[test]
fn exhaustive_is_deterministic() {
    let c = cfg(2, &[0, 1], SearchMode::Exhaustive, 0, 1 << 16);
    let a = search_counterexamples(&c).unwrap();
    let b = search_counterexamples(&c).unwrap();
    assert_eq!(a, b);
}

#[test]
fn random_mode_is_reproducible() {
    let c = cfg(2, &[0, 1], SearchMode::Random, 12345, 20_000);
    let a = run_search(&c, |_| {}).unwrap();
    let b = run_search(&c, |_| {}).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.examined, 20_000);
    assert!(!a.found.is_empty());
    let other = run_search(&cfg(2, &[0, 1], SearchMode::Random, 54321, 20_000), |_| {}).unwrap();
    assert_ne!(a.found, other.found);
}

#[test]
fn emission_order_matches_result_order() {
    let mut seen = Vec::new();
    let summary = run_search(&cfg(2, &[0, 1], SearchMode::Exhaustive, 0, 1 << 16), |c| seen.push(c.index)).unwrap();
    assert_eq!(seen, summary.found.iter().map(|c| c.index).collect::<Vec<_>>());
}

#[test]
fn budget_and_grid_are_validated() {
    let err = search_counterexamples(&cfg(2, &[0, 1, 2], SearchMode::Exhaustive, 0, 1 << 16)).unwrap_err();
    assert!(matches!(err, Error::BudgetExceeded { .. }));
    assert!(search_counterexamples(&cfg(2, &[0, 0], SearchMode::Exhaustive, 0, 1 << 16)).is_err());
    assert!(search_counterexamples(&cfg(2, &[-1, 1], SearchMode::Exhaustive, 0, 1 << 16)).is_err());
    assert!(search_counterexamples(&cfg(7, &[0, 1], SearchMode::Random, 0, 10)).is_err());
}
