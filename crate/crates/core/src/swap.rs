//! Improving edge swaps and descent to a path-condition fixed point.
//!
//! Given a path `v₁ v₂ … v_{t−1} v_t` with `d(v₁) < d(v_t)` and
//! `d(v₂) > d(v_{t−1})`, replacing the edges `v₁v₂`, `v_{t−1}v_t` with
//! `v₁v_{t−1}`, `v₂v_t` keeps every degree and changes the Sombor index by
//! `gap(d(v₁), d(v_t), d(v_{t−1})) − gap(d(v₁), d(v_t), d(v₂))`, which is
//! negative because the gap is strictly increasing.

use serde::Serialize;
use thiserror::Error;

use crate::greedy::{check_path_condition, PathCheck, PathWitness};
use crate::tree::Tree;
use crate::weight::raw_gap;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SwapError {
    #[error("stale swap: edge {0}-{1} is not in the tree")]
    Stale(usize, usize),
    #[error("step limit of {0} swaps exceeded")]
    StepLimit(usize),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EdgeSwap {
    pub removed: [(usize, usize); 2],
    pub added: [(usize, usize); 2],
    /// `SO(after) − SO(before)`; negative for every swap built here.
    pub predicted_delta: f64,
}

impl EdgeSwap {
    /// The swap for a violating path, or `None` if the path does not violate
    /// the condition.
    pub fn from_witness(tree: &Tree, witness: &PathWitness) -> Option<EdgeSwap> {
        if witness.path.len() < 4 {
            return None;
        }
        let (v1, v2, vp, vt) = (witness.first(), witness.second(), witness.penultimate(), witness.last());
        let deg = |v: usize| tree.degree(v) as u32;
        if !(deg(v1) < deg(vt) && deg(v2) > deg(vp)) {
            return None;
        }
        let predicted_delta = raw_gap(deg(v1), deg(vt), deg(vp)) - raw_gap(deg(v1), deg(vt), deg(v2));
        Some(EdgeSwap { removed: [(v1, v2), (vp, vt)], added: [(v1, vp), (v2, vt)], predicted_delta })
    }
}

/// First improving swap in lexicographic `(v₁, v_t)` scan order.
pub fn find_improving_swap(tree: &Tree) -> Option<EdgeSwap> {
    match check_path_condition(tree) {
        PathCheck::Holds => None,
        PathCheck::Violated(w) => {
            Some(EdgeSwap::from_witness(tree, &w).expect("path check returns violating witnesses"))
        }
    }
}

/// Improving swap with the most negative predicted delta, ties broken by scan
/// order.
pub fn find_best_swap(tree: &Tree) -> Option<EdgeSwap> {
    let n = tree.vertex_count();
    let mut best: Option<EdgeSwap> = None;
    for start in 0..n {
        let (_, parent) = tree.bfs(start);
        for end in 0..n {
            if tree.degree(start) >= tree.degree(end) {
                continue;
            }
            let mut path = vec![end];
            let mut cur = end;
            while let Some(p) = parent[cur] {
                path.push(p);
                cur = p;
            }
            path.reverse();
            if let Some(swap) = EdgeSwap::from_witness(tree, &PathWitness { path }) {
                if best.as_ref().map_or(true, |b| swap.predicted_delta < b.predicted_delta) {
                    best = Some(swap);
                }
            }
        }
    }
    best
}

/// Applies `swap`, failing if either removed edge is missing.
pub fn apply_swap(tree: &Tree, swap: &EdgeSwap) -> Result<Tree, SwapError> {
    for &(u, v) in &swap.removed {
        if !tree.has_edge(u, v) {
            return Err(SwapError::Stale(u, v));
        }
    }
    // The removed edges lie on one path in the order v₁v₂ … v_{t−1}v_t, which is
    // what makes the result a tree; a forged swap could break that.
    let [(v1, v2), (vp, vt)] = swap.removed;
    let path = tree.path_between(v1, vt);
    if path.len() < 4 || path[1] != v2 || path[path.len() - 2] != vp {
        return Err(SwapError::Stale(v1, vt));
    }
    Ok(tree.with_edges_replaced(&swap.removed, &swap.added))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    FirstImprovement,
    BestImprovement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchConfig {
    pub strategy: Strategy,
    /// Defaults to `10·n²` when unset.
    pub step_limit: Option<usize>,
}

/// One applied swap and the index after it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SwapStep {
    pub swap: EdgeSwap,
    pub sombor: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchOutcome {
    pub tree: Tree,
    pub steps: usize,
    pub initial_sombor: f64,
    pub final_sombor: f64,
    pub trace: Vec<SwapStep>,
}

/// Applies improving swaps until the path condition holds.
pub fn local_search(tree: &Tree, config: SearchConfig) -> Result<SearchOutcome, SwapError> {
    let n = tree.vertex_count();
    let limit = config.step_limit.unwrap_or(10 * n * n);
    let initial_sombor = tree.sombor();
    let mut current = tree.clone();
    let mut sombor = initial_sombor;
    let mut trace = Vec::new();
    loop {
        let swap = match config.strategy {
            Strategy::FirstImprovement => find_improving_swap(&current),
            Strategy::BestImprovement => find_best_swap(&current),
        };
        let Some(swap) = swap else { break };
        if trace.len() == limit {
            return Err(SwapError::StepLimit(limit));
        }
        current = apply_swap(&current, &swap)?;
        let next = current.sombor();
        debug_assert!(next < sombor, "swap did not improve: {sombor} -> {next}");
        sombor = next;
        trace.push(SwapStep { swap, sombor });
    }
    Ok(SearchOutcome { tree: current, steps: trace.len(), initial_sombor, final_sombor: sombor, trace })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::greedy::build_greedy_tree;
    use crate::sequence::DegreeSequence;

    fn chain_323() -> Tree {
        Tree::new(7, [(0, 1), (1, 2), (0, 3), (0, 4), (2, 5), (2, 6)]).unwrap()
    }

    fn greedy(s: &str) -> Tree {
        build_greedy_tree(&s.parse::<DegreeSequence>().unwrap()).into_tree()
    }

    #[test]
    fn chain_swap_reaches_greedy_value() {
        let t = chain_323();
        let before = 2.0 * 13f64.sqrt() + 4.0 * 10f64.sqrt();
        assert!((t.sombor() - before).abs() < 1e-12);
        assert!((t.sombor() - 19.860_213_192).abs() < 1e-9);

        let swap = find_improving_swap(&t).unwrap();
        assert!(swap.predicted_delta < 0.0);
        let after = apply_swap(&t, &swap).unwrap();
        let expected = 18f64.sqrt() + 13f64.sqrt() + 3.0 * 10f64.sqrt() + 5f64.sqrt();
        assert!((after.sombor() - expected).abs() < 1e-12);
        assert!((after.sombor() - t.sombor() - swap.predicted_delta).abs() < 1e-12);
        assert_eq!(after.internal_degree_sequence(), t.internal_degree_sequence());
        assert_eq!(after.canonical_form(), greedy("3,3,2").canonical_form());
    }

    #[test]
    fn no_swap_on_fixed_points() {
        assert!(find_improving_swap(&greedy("3,3,2")).is_none());
        assert!(find_improving_swap(&Tree::path(5)).is_none());
        assert!(find_best_swap(&Tree::path(5)).is_none());
    }

    #[test]
    fn stale_swap_is_rejected() {
        let t = chain_323();
        let swap = find_improving_swap(&t).unwrap();
        let after = apply_swap(&t, &swap).unwrap();
        assert!(matches!(apply_swap(&after, &swap), Err(SwapError::Stale(..))));
    }

    #[test]
    fn forged_swap_is_rejected() {
        // Both edges exist, but 0 is not the second vertex on the path from 1 to 4.
        let t = Tree::path(6);
        let forged = EdgeSwap { removed: [(1, 0), (3, 4)], added: [(1, 3), (0, 4)], predicted_delta: -1.0 };
        assert!(apply_swap(&t, &forged).is_err());
    }

    #[test]
    fn local_search_examples() {
        let out = local_search(&chain_323(), SearchConfig::default()).unwrap();
        assert_eq!(out.steps, 1);
        assert!((out.final_sombor - 19.571_092_921).abs() < 1e-9);
        assert!(check_path_condition(&out.tree).holds());

        let g = greedy("4,3,3,2");
        let out = local_search(&g, SearchConfig::default()).unwrap();
        assert_eq!(out.steps, 0);
        assert_eq!(out.tree, g);
    }

    #[test]
    fn best_improvement_also_converges() {
        let config = SearchConfig { strategy: Strategy::BestImprovement, step_limit: None };
        let out = local_search(&chain_323(), config).unwrap();
        assert!(check_path_condition(&out.tree).holds());
        assert!(out.final_sombor <= 19.571_092_921 + 1e-9);
    }

    #[test]
    fn step_limit_is_enforced() {
        let config = SearchConfig { step_limit: Some(0), ..SearchConfig::default() };
        assert_eq!(local_search(&chain_323(), config), Err(SwapError::StepLimit(0)));
        // A fixed point needs no steps, so even a zero limit is fine.
        assert!(local_search(&Tree::path(5), config).is_ok());
    }
}
