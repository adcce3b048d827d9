//! Shared fixtures for the benchmarks: seeded relations and forests.

use relforest_core::gen;
use relforest_core::relation::Relation;

pub fn seeded_relation(n: usize, seed: u64) -> Relation {
    let mut rng = gen::rng_from_seed(seed);
    gen::relation(&mut rng, n)
}

pub fn seeded_forest(n: usize, seed: u64) -> Relation {
    let mut rng = gen::rng_from_seed(seed);
    gen::forest(&mut rng, n)
}

/// A maximal-depth forest: one chain through the whole universe.
pub fn chain(n: usize) -> Relation {
    Relation::from_fn(n, |i, j| if i + 1 < n { j == i + 1 } else { j == i })
}
