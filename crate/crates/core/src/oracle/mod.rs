//! Exhaustive oracle: enumerate every labeled tree with a prescribed degree
//! assignment through its Prüfer code, and compare the greedy tree's Sombor
//! index against the true minimum.

mod prufer;

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::greedy::build_greedy_tree;
use crate::sequence::DegreeSequence;
use crate::tree::{CompensatedSum, Tree};
use crate::weight::raw_edge_weight;

use prufer::Decoder;
pub use prufer::{
    prufer_decode, prufer_encode, prufer_multiset, random_prufer_code, random_tree, random_tree_with_degrees,
    PruferCode,
};

/// Default cap on the number of labeled trees one enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Default absolute tolerance for comparing the greedy value with the oracle minimum.
pub const VERIFY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("invalid Prüfer code: {0}")]
    InvalidCode(String),
    #[error("enumeration of {count} trees exceeds the budget of {budget}")]
    BudgetExceeded { count: u128, budget: u64 },
    #[error("enumeration visited {visited} trees but the multinomial count is {expected}")]
    CountMismatch { visited: u64, expected: u128 },
}

/// `(n − 2)! / ∏(dᵢ − 1)!`, the number of labeled trees in which internal
/// vertex `i` has degree `dᵢ`. `None` on overflow.
pub fn tree_count(degrees: &DegreeSequence) -> Option<u128> {
    // Multiply binomials one block at a time to stay exact.
    let mut count: u128 = 1;
    let mut placed: u128 = 0;
    for &d in degrees.as_slice() {
        for j in 1..=u128::from(d - 1) {
            placed += 1;
            count = count.checked_mul(placed)? / j;
        }
    }
    Some(count)
}

/// Distinct permutations of a multiset in lexicographic order, starting from
/// the sorted arrangement.
#[derive(Debug, Clone)]
pub struct MultisetPermutations {
    current: Vec<usize>,
    done: bool,
}

impl MultisetPermutations {
    pub fn new(mut items: Vec<usize>) -> Self {
        items.sort_unstable();
        MultisetPermutations { current: items, done: false }
    }

    /// The arrangement the next call to `advance` will move past.
    pub fn current(&self) -> Option<&[usize]> {
        (!self.done).then_some(self.current.as_slice())
    }

    /// Steps to the lexicographic successor; returns `false` once exhausted.
    pub fn advance(&mut self) -> bool {
        let v = &mut self.current;
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            self.done = true;
            return false;
        };
        let pivot = i - 1;
        let j = (i..v.len()).rev().find(|&j| v[j] > v[pivot]).expect("v[i] exceeds the pivot");
        v.swap(pivot, j);
        v[i..].reverse();
        true
    }
}

impl Iterator for MultisetPermutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current()?.to_vec();
        self.advance();
        Some(out)
    }
}

/// Every labeled tree on `total_vertices()` vertices in which vertex `i < k`
/// has degree `dᵢ` and the rest are leaves, in lexicographic Prüfer order.
pub struct TreeEnumeration {
    codes: MultisetPermutations,
    n: usize,
    decoder: Decoder,
}

impl Iterator for TreeEnumeration {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        let code = self.codes.current()?;
        self.decoder.decode(code, self.n);
        self.codes.advance();
        Some(Tree::from_edges_unchecked(self.n, self.decoder.edges.iter().copied()))
    }
}

fn checked_count(degrees: &DegreeSequence, budget: u64) -> Result<u128, OracleError> {
    match tree_count(degrees) {
        Some(count) if count <= u128::from(budget) => Ok(count),
        Some(count) => Err(OracleError::BudgetExceeded { count, budget }),
        None => Err(OracleError::BudgetExceeded { count: u128::MAX, budget }),
    }
}

pub fn enumerate_trees(degrees: &DegreeSequence, budget: u64) -> Result<TreeEnumeration, OracleError> {
    checked_count(degrees, budget)?;
    Ok(TreeEnumeration {
        codes: MultisetPermutations::new(prufer_multiset(degrees)),
        n: degrees.total_vertices(),
        decoder: Decoder::default(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub budget: u64,
    /// Count isomorphism classes among the enumerated trees. Costs one
    /// canonical form per tree.
    pub count_classes: bool,
    /// Absolute tolerance for the pass criterion.
    pub tolerance: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { budget: DEFAULT_BUDGET, count_classes: true, tolerance: VERIFY_TOLERANCE }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub degree_sequence: DegreeSequence,
    pub vertices: usize,
    pub greedy_value: f64,
    pub oracle_min: f64,
    /// First enumerated tree attaining the minimum.
    pub argmin: Tree,
    pub argmin_canonical: String,
    pub labeled_count: u64,
    pub isomorphism_classes: Option<u64>,
    pub pass: bool,
}

/// Compares the greedy tree against every tree realizing `degrees`.
pub fn verify_minimality(degrees: &DegreeSequence, options: VerifyOptions) -> Result<VerificationReport, OracleError> {
    let expected = checked_count(degrees, options.budget)?;
    let n = degrees.total_vertices();
    let full = degrees.full_degrees();
    let mut codes = MultisetPermutations::new(prufer_multiset(degrees));
    let mut decoder = Decoder::default();
    let mut classes = HashSet::new();

    let mut visited: u64 = 0;
    let mut best_value = f64::INFINITY;
    let mut best_edges = Vec::new();
    while let Some(code) = codes.current() {
        decoder.decode(code, n);
        visited += 1;
        let mut sum = CompensatedSum::default();
        for &(u, v) in &decoder.edges {
            sum.add(raw_edge_weight(full[u], full[v]));
        }
        let value = sum.value();
        if value < best_value {
            best_value = value;
            best_edges.clone_from(&decoder.edges);
        }
        if options.count_classes {
            classes.insert(Tree::from_edges_unchecked(n, decoder.edges.iter().copied()).canonical_form());
        }
        codes.advance();
    }
    if u128::from(visited) != expected {
        return Err(OracleError::CountMismatch { visited, expected });
    }

    let argmin = Tree::from_edges_unchecked(n, best_edges);
    let greedy_value = build_greedy_tree(degrees).tree().sombor();
    let tol = options.tolerance;
    let pass = (greedy_value - best_value).abs() <= tol && greedy_value <= best_value + tol;
    Ok(VerificationReport {
        degree_sequence: degrees.clone(),
        vertices: n,
        greedy_value,
        oracle_min: best_value,
        argmin_canonical: argmin.canonical_form(),
        argmin,
        labeled_count: visited,
        isomorphism_classes: options.count_classes.then_some(classes.len() as u64),
        pass,
    })
}

/// One row of a sweep: the sequence and either its report or why it was skipped.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepEntry {
    pub degree_sequence: DegreeSequence,
    pub outcome: Result<VerificationReport, OracleError>,
}

/// Verifies every sequence with at most `max_vertices` vertices, in parallel.
/// Entries come back in [`DegreeSequence::all_up_to`] order.
pub fn sweep(max_vertices: usize, options: VerifyOptions) -> Vec<SweepEntry> {
    DegreeSequence::all_up_to(max_vertices)
        .into_par_iter()
        .map(|degrees| SweepEntry { outcome: verify_minimality(&degrees, options), degree_sequence: degrees })
        .collect()
}
