//! Shared workloads for the benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sombor_core::oracle::{random_tree, random_tree_with_degrees};
use sombor_core::{DegreeSequence, Tree};

/// Sequences whose oracle enumeration ranges from tens to hundreds of thousands of trees.
pub fn oracle_sequences() -> Vec<DegreeSequence> {
    ["3,3,2", "4,3,3,2", "3,3,3,2,2", "4,4,3,2,2"].iter().map(|s| s.parse().unwrap()).collect()
}

pub fn random_trees(n: usize, count: usize, seed: u64) -> Vec<Tree> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_tree(n, &mut rng)).collect()
}

pub fn random_realizations(degrees: &DegreeSequence, count: usize, seed: u64) -> Vec<Tree> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_tree_with_degrees(degrees, &mut rng)).collect()
}

/// A long sequence for construction benchmarks: `k` internal vertices with
/// degrees cycling through `2..=max`.
pub fn long_sequence(k: usize, max: u32) -> DegreeSequence {
    DegreeSequence::normalize((0..k).map(|i| i64::from(2 + (i as u32 % (max - 1))))).unwrap()
}
