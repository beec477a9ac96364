//! Greedy tree construction and the structural predicates satisfied by
//! Sombor-minimal trees.
//!
//! The greedy tree hands out degrees in non-increasing order: the root takes
//! the largest, its children the next largest, and then the labelled vertex of
//! largest degree whose children are still unassigned is expanded next. Since
//! degrees are handed out in non-increasing order, this is a breadth-first
//! fill.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use crate::sequence::DegreeSequence;
use crate::tree::{RootedTree, Tree};
use crate::weight::Degree;

/// Builds the greedy tree for `degrees`.
///
/// Internal vertices are labelled `0..k` in the order they receive a degree,
/// so vertex `i` has degree `dᵢ`; leaves take `k..n`. Equal degrees go to the
/// lowest pending label first. The empty sequence yields `K₂`.
pub fn build_greedy_tree(degrees: &DegreeSequence) -> RootedTree {
    let full = degrees.full_degrees();
    let n = full.len();
    if degrees.is_empty() {
        return RootedTree::new(Tree::path(2), 0);
    }

    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    // (degree, Reverse(label)): largest degree first, then lowest label.
    let mut frontier = BinaryHeap::from([(full[0], Reverse(0usize))]);
    while let Some((degree, Reverse(v))) = frontier.pop() {
        let children = if v == 0 { degree } else { degree - 1 };
        for _ in 0..children {
            edges.push((v, next));
            if full[next] > 1 {
                frontier.push((full[next], Reverse(next)));
            }
            next += 1;
        }
    }
    debug_assert_eq!(next, n);
    RootedTree::new(Tree::from_edges_unchecked(n, edges), 0)
}

/// A path `v₁ … v_t` (`t ≥ 4`) with `d(v₁) < d(v_t)` but `d(v₂) > d(v_{t−1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathWitness {
    pub path: Vec<usize>,
}

impl PathWitness {
    pub fn first(&self) -> usize {
        self.path[0]
    }

    pub fn second(&self) -> usize {
        self.path[1]
    }

    pub fn penultimate(&self) -> usize {
        self.path[self.path.len() - 2]
    }

    pub fn last(&self) -> usize {
        self.path[self.path.len() - 1]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathCheck {
    Holds,
    Violated(PathWitness),
}

impl PathCheck {
    pub fn holds(&self) -> bool {
        matches!(self, PathCheck::Holds)
    }

    pub fn witness(&self) -> Option<&PathWitness> {
        match self {
            PathCheck::Holds => None,
            PathCheck::Violated(w) => Some(w),
        }
    }
}

/// Checks that every path `v₁ … v_t` with `t ≥ 4` and `d(v₁) < d(v_t)` has
/// `d(v₂) ≤ d(v_{t−1})`. Endpoint pairs are scanned in lexicographic order
/// and the first violation is returned.
pub fn check_path_condition(tree: &Tree) -> PathCheck {
    let n = tree.vertex_count();
    let deg = |v: usize| tree.degree(v);
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut first_step = vec![usize::MAX; n];
    let mut queue = VecDeque::with_capacity(n);

    for start in 0..n {
        // Only endpoints with larger degree matter; nothing beats the maximum.
        if (0..n).all(|v| deg(v) <= deg(start)) {
            continue;
        }
        depth.fill(usize::MAX);
        depth[start] = 0;
        queue.clear();
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for &w in tree.neighbors(v) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent[w] = v;
                    first_step[w] = if v == start { w } else { first_step[v] };
                    queue.push_back(w);
                }
            }
        }
        for end in 0..n {
            if depth[end] >= 3 && deg(start) < deg(end) && deg(first_step[end]) > deg(parent[end]) {
                return PathCheck::Violated(PathWitness { path: tree.path_between(start, end) });
            }
        }
    }
    PathCheck::Holds
}

/// Whether the vertices of degree at least `min_degree` induce a connected
/// subgraph. An empty set counts as connected.
pub fn check_subtree_property(tree: &Tree, min_degree: Degree) -> bool {
    let keep = |v: usize| tree.degree(v) >= min_degree.get() as usize;
    let members: Vec<usize> = (0..tree.vertex_count()).filter(|&v| keep(v)).collect();
    let Some(&start) = members.first() else {
        return true;
    };
    let mut seen = vec![false; tree.vertex_count()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &w in tree.neighbors(v) {
            if keep(w) && !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == members.len()
}

/// `levels[v]` is the distance from `v` to its nearest pendant vertex.
pub fn pendant_levels(tree: &Tree) -> Vec<usize> {
    let n = tree.vertex_count();
    let mut level = vec![usize::MAX; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| tree.is_pendant(v)).collect();
    for &v in &queue {
        level[v] = 0;
    }
    while let Some(v) = queue.pop_front() {
        for &w in tree.neighbors(v) {
            if level[w] == usize::MAX {
                level[w] = level[v] + 1;
                queue.push_back(w);
            }
        }
    }
    level
}

/// Whether degrees never decrease from a level set `Lᵢ` to any later `Lⱼ`,
/// where `Lᵢ` holds the vertices at distance `i` from the nearest pendant
/// vertex.
pub fn check_level_monotonicity(tree: &Tree) -> bool {
    let level = pendant_levels(tree);
    let depth = level.iter().copied().max().unwrap_or(0);
    let mut lo = vec![usize::MAX; depth + 1];
    let mut hi = vec![0; depth + 1];
    for (v, &l) in level.iter().enumerate() {
        lo[l] = lo[l].min(tree.degree(v));
        hi[l] = hi[l].max(tree.degree(v));
    }
    let mut running_max = 0;
    for l in 0..=depth {
        if lo[l] < running_max {
            return false;
        }
        running_max = running_max.max(hi[l]);
    }
    true
}
