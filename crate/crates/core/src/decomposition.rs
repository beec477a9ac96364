//! Peeling a tree down to a star one internal vertex at a time.
//!
//! For a tree `T_k` satisfying the path condition, a minimum-degree internal
//! vertex `v_k` whose children are all pendant can be turned back into a leaf,
//! giving `T_{k−1}`. Repeating this ends at the star `T₁ = K_{1,d₁}`. Going the
//! other way, promoting a leaf with parent degree `d_p` to degree `d_t` changes
//! the Sombor index by
//!
//! ```text
//! (d_t − 1)·√(d_t² + 1) + √(d_t² + d_p²) − √(d_p² + 1)
//! ```
//!
//! so the index of `T` can be replayed from the star's `d₁·√(d₁² + 1)`.

use serde::Serialize;
use thiserror::Error;

use crate::greedy::{check_path_condition, PathCheck};
use crate::tree::{CompensatedSum, RootedTree, Tree};
use crate::weight::{raw_edge_weight, Degree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("tree violates the path condition along {0:?}")]
    PathConditionViolated(Vec<usize>),
    #[error("no minimum-degree internal vertex can be stripped")]
    NoStrippableVertex,
    #[error("the tree has no internal vertex to strip")]
    NothingToStrip,
    #[error("vertex {0} is not pendant")]
    NotPendant(usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("attached degree must be at least 2, got {0}")]
    DegreeTooSmall(u32),
}

/// One promotion in the rebuild `T_{t−1} → T_t`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecompositionStep {
    /// `t`, the number of internal vertices after this step.
    #[serde(rename = "t")]
    pub index_t: usize,
    /// The pendant vertex of `T_{t−1}` that gets promoted.
    pub attached_at: usize,
    pub d_t: u32,
    /// Degree of the promoted vertex's neighbour.
    pub d_p: u32,
    pub added_leaves: u32,
    pub delta: f64,
}

/// `so_prev` plus the index change of promoting a leaf whose neighbour has
/// degree `d_p` to degree `d_t`.
pub fn incremental_sombor(so_prev: f64, d_t: Degree, d_p: Degree) -> f64 {
    so_prev + promotion_delta(d_t.get(), d_p.get())
}

fn promotion_delta(d_t: u32, d_p: u32) -> f64 {
    f64::from(d_t - 1) * raw_edge_weight(d_t, 1) + raw_edge_weight(d_t, d_p) - raw_edge_weight(d_p, 1)
}

/// Gives pendant vertex `v` of `tree` `d_t − 1` new pendant neighbours,
/// labelled after the existing vertices.
pub fn attach(tree: &Tree, v: usize, d_t: Degree) -> Result<Tree, DecompositionError> {
    let n = tree.vertex_count();
    if v >= n {
        return Err(DecompositionError::OutOfRange { vertex: v, n });
    }
    if !tree.is_pendant(v) {
        return Err(DecompositionError::NotPendant(v));
    }
    if d_t.get() < 2 {
        return Err(DecompositionError::DegreeTooSmall(d_t.get()));
    }
    let extra = d_t.get() as usize - 1;
    let edges = tree.edges().iter().copied().chain((n..n + extra).map(|w| (v, w)));
    Ok(Tree::from_edges_unchecked(n + extra, edges))
}

/// Removes `drop` (all pendant) and closes the gaps in the labelling, keeping
/// the relative order of the survivors.
fn remove_leaves(tree: &Tree, drop: &[usize]) -> (Tree, Vec<usize>) {
    let n = tree.vertex_count();
    let mut removed = vec![false; n];
    for &v in drop {
        removed[v] = true;
    }
    let mut new_label = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if !removed[v] {
            new_label[v] = next;
            next += 1;
        }
    }
    let edges =
        tree.edges().iter().filter(|&&(u, v)| !removed[u] && !removed[v]).map(|&(u, v)| (new_label[u], new_label[v]));
    (Tree::from_edges_unchecked(next, edges), new_label)
}

/// Strips the last internal vertex: returns `T_{k−1}` and the step that
/// rebuilds `T_k` from it.
///
/// The tree is rooted at its maximum-degree vertex (lowest label on ties). The
/// stripped vertex is a minimum-degree internal vertex with only pendant
/// children, the deepest in breadth-first order; should stripping it break the
/// path condition, the next such candidate is tried. A star strips to `K₂`.
pub fn strip_last(tree: &Tree) -> Result<(Tree, DecompositionStep), DecompositionError> {
    if let PathCheck::Violated(w) = check_path_condition(tree) {
        return Err(DecompositionError::PathConditionViolated(w.path));
    }
    let n = tree.vertex_count();
    let internal: Vec<usize> = (0..n).filter(|&v| !tree.is_pendant(v)).collect();
    let k = internal.len();
    let step = |attached_at, d_t: usize, d_p: usize| DecompositionStep {
        index_t: k,
        attached_at,
        d_t: d_t as u32,
        d_p: d_p as u32,
        added_leaves: d_t as u32 - 1,
        delta: promotion_delta(d_t as u32, d_p as u32),
    };

    match k {
        0 => Err(DecompositionError::NothingToStrip),
        1 => {
            // Keep the lowest-labelled leaf as the other end of K₂.
            let center = internal[0];
            let drop = &tree.neighbors(center)[1..];
            let (stripped, labels) = remove_leaves(tree, drop);
            Ok((stripped, step(labels[center], tree.degree(center), 1)))
        }
        _ => {
            let rooted = RootedTree::at_max_degree(tree.clone());
            let min_degree = internal.iter().map(|&v| tree.degree(v)).min().expect("k >= 2");
            let candidates = rooted.bfs_order().iter().rev().copied().filter(|&v| {
                v != rooted.root() && tree.degree(v) == min_degree && rooted.children(v).all(|c| tree.is_pendant(c))
            });
            for v in candidates {
                let children: Vec<usize> = rooted.children(v).collect();
                let (stripped, labels) = remove_leaves(tree, &children);
                if check_path_condition(&stripped).holds() {
                    let parent = rooted.parent(v).expect("non-root vertices have parents");
                    return Ok((stripped, step(labels[v], min_degree, tree.degree(parent))));
                }
            }
            Err(DecompositionError::NoStrippableVertex)
        }
    }
}

/// The full sequence `T₁, …, T_k` and the promotions that rebuild it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Decomposition {
    /// `T₁`, or `K₂` for a tree without internal vertices.
    pub base: Tree,
    pub base_value: f64,
    /// Promotions in rebuild order, `t = 2, …, k`.
    pub steps: Vec<DecompositionStep>,
    /// `T₁, …, T_k`.
    #[serde(skip)]
    pub trees: Vec<Tree>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReplayRow {
    pub t: usize,
    pub d_t: u32,
    pub d_p: u32,
    pub delta: f64,
    pub running_total: f64,
}

impl Decomposition {
    /// Running index totals, starting from the base value.
    pub fn replay(&self) -> Vec<ReplayRow> {
        let mut total = CompensatedSum::default();
        total.add(self.base_value);
        self.steps
            .iter()
            .map(|s| {
                total.add(s.delta);
                ReplayRow { t: s.index_t, d_t: s.d_t, d_p: s.d_p, delta: s.delta, running_total: total.value() }
            })
            .collect()
    }

    pub fn replayed_value(&self) -> f64 {
        self.replay().last().map_or(self.base_value, |r| r.running_total)
    }
}

/// Strips repeatedly down to the star.
pub fn decompose(tree: &Tree) -> Result<Decomposition, DecompositionError> {
    if let PathCheck::Violated(w) = check_path_condition(tree) {
        return Err(DecompositionError::PathConditionViolated(w.path));
    }
    let mut trees = vec![tree.clone()];
    let mut steps = Vec::new();
    let mut current = tree.clone();
    while (0..current.vertex_count()).filter(|&v| !current.is_pendant(v)).count() > 1 {
        let (prev, step) = strip_last(&current)?;
        steps.push(step);
        trees.push(prev.clone());
        current = prev;
    }
    steps.reverse();
    trees.reverse();
    let base_value = match current.internal_degree_sequence().max_degree() {
        Some(d) => f64::from(d) * raw_edge_weight(d, 1),
        None => current.sombor(),
    };
    Ok(Decomposition { base: current, base_value, steps, trees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::greedy::build_greedy_tree;
    use crate::sequence::DegreeSequence;

    fn greedy(s: &str) -> Tree {
        build_greedy_tree(&s.parse::<DegreeSequence>().unwrap()).into_tree()
    }

    fn d(v: u32) -> Degree {
        Degree::new(v).unwrap()
    }

    #[test]
    fn strip_greedy_332() {
        let (prev, step) = strip_last(&greedy("3,3,2")).unwrap();
        assert_eq!(prev.canonical_form(), greedy("3,3").canonical_form());
        assert_eq!(step.index_t, 3);
        assert_eq!((step.d_t, step.d_p, step.added_leaves), (2, 3, 1));
    }

    #[test]
    fn strip_star_gives_k2() {
        let (prev, step) = strip_last(&Tree::star(4)).unwrap();
        assert_eq!(prev, Tree::path(2));
        assert_eq!((step.d_t, step.d_p), (4, 1));
        assert!((incremental_sombor(prev.sombor(), d(4), d(1)) - Tree::star(4).sombor()).abs() < 1e-12);
        assert_eq!(strip_last(&Tree::path(2)), Err(DecompositionError::NothingToStrip));
    }

    #[test]
    fn strip_rejects_path_condition_violations() {
        let chain = Tree::new(7, [(0, 1), (1, 2), (0, 3), (0, 4), (2, 5), (2, 6)]).unwrap();
        assert!(matches!(strip_last(&chain), Err(DecompositionError::PathConditionViolated(_))));
        assert!(matches!(decompose(&chain), Err(DecompositionError::PathConditionViolated(_))));
    }

    #[test]
    fn attach_examples() {
        let t = attach(&Tree::star(3), 1, d(2)).unwrap();
        assert_eq!(t.vertex_count(), 5);
        assert_eq!(t.degree(1), 2);
        assert_eq!(t.canonical_form(), greedy("3,2").canonical_form());

        let t = attach(&Tree::star(3), 2, d(5)).unwrap();
        assert_eq!(t.degree(2), 5);
        assert_eq!(t.vertex_count(), 8);
    }

    #[test]
    fn attach_errors() {
        assert_eq!(attach(&Tree::star(3), 0, d(2)), Err(DecompositionError::NotPendant(0)));
        assert_eq!(attach(&Tree::star(3), 9, d(2)), Err(DecompositionError::OutOfRange { vertex: 9, n: 4 }));
        assert_eq!(attach(&Tree::star(3), 1, d(1)), Err(DecompositionError::DegreeTooSmall(1)));
    }

    #[test]
    fn incremental_examples() {
        let star = 3.0 * 10f64.sqrt();
        let got = incremental_sombor(star, d(2), d(3));
        assert!((got - (star + 5f64.sqrt() + 13f64.sqrt() - 10f64.sqrt())).abs() < 1e-12);
        assert!((got - greedy("3,2").sombor()).abs() < 1e-12);
        assert!((got - 12.166_174_573).abs() < 1e-9);

        let k2 = 2f64.sqrt();
        let got = incremental_sombor(k2, d(2), d(1));
        assert!((got - (k2 + 2.0 * 5f64.sqrt() - 2f64.sqrt())).abs() < 1e-12);
        assert!((got - Tree::path(3).sombor()).abs() < 1e-12);
    }

    #[test]
    fn chained_increments_over_greedy_332() {
        // (3) → (3,3) → (3,3,2), promoting leaves of degree-3 parents.
        let so = incremental_sombor(incremental_sombor(3.0 * 10f64.sqrt(), d(3), d(3)), d(2), d(3));
        assert!((so - 19.571_092_921).abs() < 1e-9);
        assert!((so - greedy("3,3,2").sombor()).abs() < 1e-12);
    }

    #[test]
    fn decompose_examples() {
        let dec = decompose(&greedy("4,3,2")).unwrap();
        assert_eq!(dec.steps.len(), 2);
        assert_eq!(dec.base.canonical_form(), Tree::star(4).canonical_form());
        assert_eq!(dec.trees.len(), 3);
        assert_eq!(dec.steps.iter().map(|s| s.index_t).collect::<Vec<_>>(), vec![2, 3]);
        assert!((dec.replayed_value() - greedy("4,3,2").sombor()).abs() < 1e-12);

        let dec = decompose(&Tree::star(5)).unwrap();
        assert!(dec.steps.is_empty());
        assert!((dec.replayed_value() - Tree::star(5).sombor()).abs() < 1e-12);

        let dec = decompose(&Tree::path(2)).unwrap();
        assert!(dec.steps.is_empty());
        assert!((dec.replayed_value() - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn attach_then_strip_is_identity() {
        // Promote the first leaf of the greedy tree of (4,3,3) to degree 2.
        let prev = greedy("4,3,3");
        let leaf = (0..prev.vertex_count()).find(|&v| prev.is_pendant(v)).unwrap();
        let grown = attach(&prev, leaf, d(2)).unwrap();
        let (back, step) = strip_last(&grown).unwrap();
        assert_eq!(back, prev);
        assert_eq!(step.attached_at, leaf);
    }

    #[test]
    fn step_delta_decreases_in_parent_degree() {
        for d_t in 2..=50 {
            for d_p in 2..50 {
                assert!(promotion_delta(d_t, d_p + 1) < promotion_delta(d_t, d_p));
            }
        }
    }
}
