//! Finite distributive lattices, their Birkhoff embeddings, and exact
//! verification of the four functions theorem family of correlation
//! inequalities (four functions theorem, FKG, q-FKG and the q-analogue of the
//! four functions theorem).
//!
//! All arithmetic is exact: weights are arbitrary-precision rationals and
//! polynomials carry rational coefficients, so every verdict is free of
//! rounding doubt. Every failed check carries a [`Witness`] with both sides'
//! exact values, so a report can be re-checked by hand.

pub mod birkhoff;
pub mod boolean;
pub mod error;
pub mod format;
pub mod inequality;
pub mod lattice;
pub mod poly;
pub mod rational;
pub mod reduction;
pub mod rng;
pub mod search;
pub mod verdict;
pub mod weights;

pub use birkhoff::{birkhoff_embed, join_irreducibles, verify_embedding, BirkhoffEmbedding};
pub use boolean::BooleanView;
pub use error::{Error, Result};
pub use inequality::{
    check_4ft_conclusion, check_ad_hypothesis, check_fkg_q, check_q4ft, check_q4ft_stronger,
    check_setminus_lemma, is_log_supermodular, is_monotone, q_weighted_polynomial, Direction,
};
pub use lattice::{
    build_lattice, check_rank_modularity, is_distributive, rank_function, standard_lattice,
    Lattice, Poset, StandardSpec,
};
pub use poly::{poly_dominates, QPolynomial};
pub use rational::Rational;
pub use verdict::{Side, Verdict, Witness};
pub use weights::{FamilySelection, WeightFunction, WeightQuadruple};
