//! Labeled trees over vertices `0..n` and degree-based indices on them.

mod canonical;
mod io;
mod rooted;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::sequence::DegreeSequence;
use crate::weight::{edge_weight, raw_edge_weight, Degree};

pub use rooted::RootedTree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("a tree needs at least two vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("cycle detected at edge {0}-{1}")]
    Cycle(usize, usize),
    #[error("not connected: {0} components")]
    NotConnected(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A simple undirected tree. Edges are stored as `(u, v)` with `u < v`, sorted,
/// so two trees compare equal exactly when their labeled edge sets do.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "io::TreeRepr", into = "io::TreeRepr")]
pub struct Tree {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

struct DisjointSets(Vec<usize>);

impl DisjointSets {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
}

impl Tree {
    /// Validates `edges` as a tree on `n` vertices.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Tree, TreeError> {
        if n < 2 {
            return Err(TreeError::TooFewVertices(n));
        }
        let mut normalized = Vec::with_capacity(n - 1);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(TreeError::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(TreeError::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        let mut sorted = normalized.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(TreeError::DuplicateEdge(w[0].0, w[0].1));
        }

        let mut sets = DisjointSets((0..n).collect());
        let mut components = n;
        for &(u, v) in &normalized {
            let (ru, rv) = (sets.find(u), sets.find(v));
            if ru == rv {
                return Err(TreeError::Cycle(u, v));
            }
            sets.0[ru] = rv;
            components -= 1;
        }
        if components > 1 {
            return Err(TreeError::NotConnected(components));
        }
        Ok(Tree::from_sorted_edges(n, sorted))
    }

    /// Builds from edges already known to form a tree.
    pub(crate) fn from_edges_unchecked(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Tree {
        let mut sorted: Vec<_> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        sorted.sort_unstable();
        debug_assert!(Tree::new(n, sorted.iter().copied()).is_ok(), "not a tree: {sorted:?}");
        Tree::from_sorted_edges(n, sorted)
    }

    fn from_sorted_edges(n: usize, edges: Vec<(usize, usize)>) -> Tree {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Tree { n, edges, adj }
    }

    /// The star `K_{1,m}` centred at vertex 0.
    pub fn star(m: usize) -> Tree {
        assert!(m >= 1, "a star needs at least one leaf");
        Tree::from_sorted_edges(m + 1, (1..=m).map(|v| (0, v)).collect())
    }

    /// The path `0 – 1 – … – (n−1)`.
    pub fn path(n: usize) -> Tree {
        assert!(n >= 2, "a path needs at least two vertices");
        Tree::from_sorted_edges(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_pendant(&self, v: usize) -> bool {
        self.adj[v].len() == 1
    }

    /// Degree of every vertex, indexed by label.
    pub fn degrees(&self) -> Vec<Degree> {
        self.adj.iter().map(|a| Degree::new(a.len() as u32).expect("tree vertices have degree at least 1")).collect()
    }

    pub fn internal_degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::normalize(self.adj.iter().map(|a| a.len() as i64)).expect("tree degrees are positive")
    }

    /// Sum of `w(d(u), d(v))` over all edges.
    pub fn index<W: IndexFunction + ?Sized>(&self, w: &W) -> f64 {
        let mut sum = CompensatedSum::default();
        for &(u, v) in &self.edges {
            let du = Degree::new(self.degree(u) as u32).expect("positive degree");
            let dv = Degree::new(self.degree(v) as u32).expect("positive degree");
            sum.add(w.weight(du, dv));
        }
        sum.value()
    }

    /// The Sombor index, `Σ √(d(u)² + d(v)²)` over edges.
    pub fn sombor(&self) -> f64 {
        self.index(&edge_weight)
    }

    /// Breadth-first order from `root` with the parent of each reached vertex.
    /// Neighbours are visited in ascending label order.
    pub fn bfs(&self, root: usize) -> (Vec<usize>, Vec<Option<usize>>) {
        let mut parent = vec![None; self.n];
        let mut seen = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
        (order, parent)
    }

    /// The unique `u`–`w` path, both endpoints included.
    pub fn path_between(&self, u: usize, w: usize) -> Vec<usize> {
        let (_, parent) = self.bfs(w);
        let mut path = vec![u];
        let mut cur = u;
        while let Some(p) = parent[cur] {
            path.push(p);
            cur = p;
        }
        path
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Tree {
        assert_eq!(perm.len(), self.n, "permutation length must match vertex count");
        Tree::from_edges_unchecked(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Returns the tree with `remove` dropped and `add` inserted. The caller
    /// guarantees the result is still a tree.
    pub(crate) fn with_edges_replaced(&self, remove: &[(usize, usize)], add: &[(usize, usize)]) -> Tree {
        let norm = |&(u, v): &(usize, usize)| (u.min(v), u.max(v));
        let remove: Vec<_> = remove.iter().map(norm).collect();
        let edges = self.edges.iter().copied().filter(|e| !remove.contains(e)).chain(add.iter().map(norm));
        Tree::from_edges_unchecked(self.n, edges)
    }
}

/// A symmetric weight on pairs of degrees. Any `Fn(Degree, Degree) -> f64`
/// qualifies.
pub trait IndexFunction {
    fn weight(&self, x: Degree, y: Degree) -> f64;
}

impl<F: Fn(Degree, Degree) -> f64> IndexFunction for F {
    fn weight(&self, x: Degree, y: Degree) -> f64 {
        self(x, y)
    }
}

/// Common edge-additive degree indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeIndex {
    Sombor,
    /// `Σ d(u) + d(v)`, which equals `Σ d(v)²` over vertices.
    FirstZagreb,
    SecondZagreb,
    Randic,
}

impl DegreeIndex {
    pub const ALL: [DegreeIndex; 4] =
        [DegreeIndex::Sombor, DegreeIndex::FirstZagreb, DegreeIndex::SecondZagreb, DegreeIndex::Randic];

    pub fn name(self) -> &'static str {
        match self {
            DegreeIndex::Sombor => "sombor",
            DegreeIndex::FirstZagreb => "first_zagreb",
            DegreeIndex::SecondZagreb => "second_zagreb",
            DegreeIndex::Randic => "randic",
        }
    }
}

impl IndexFunction for DegreeIndex {
    fn weight(&self, x: Degree, y: Degree) -> f64 {
        let (x, y) = (x.get(), y.get());
        match self {
            DegreeIndex::Sombor => raw_edge_weight(x, y),
            DegreeIndex::FirstZagreb => f64::from(x) + f64::from(y),
            DegreeIndex::SecondZagreb => f64::from(x) * f64::from(y),
            DegreeIndex::Randic => 1.0 / (f64::from(x) * f64::from(y)).sqrt(),
        }
    }
}

/// Neumaier summation. Sums over relabeled or reordered edge lists agree to
/// within an ulp or two of the total.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(self) -> f64 {
        self.sum + self.compensation
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_examples() {
        assert!(Tree::new(2, [(0, 1)]).is_ok());
        assert_eq!(Tree::new(3, [(0, 1), (1, 2), (0, 2)]), Err(TreeError::Cycle(0, 2)));
        assert_eq!(Tree::new(4, [(0, 1), (2, 3)]), Err(TreeError::NotConnected(2)));
        assert_eq!(Tree::new(3, [(0, 1), (1, 0)]), Err(TreeError::DuplicateEdge(0, 1)));
        assert_eq!(Tree::new(3, [(0, 1), (1, 3)]), Err(TreeError::OutOfRange { vertex: 3, n: 3 }));
        assert_eq!(Tree::new(3, [(1, 1), (0, 2)]), Err(TreeError::SelfLoop(1)));
        assert_eq!(Tree::new(1, []), Err(TreeError::TooFewVertices(1)));
        assert_eq!(Tree::new(5, [(0, 1), (1, 2)]), Err(TreeError::NotConnected(3)));
    }

    #[test]
    fn error_messages_name_the_problem() {
        assert!(TreeError::Cycle(0, 2).to_string().contains("cycle detected"));
        assert!(TreeError::NotConnected(2).to_string().contains("not connected"));
        assert!(TreeError::DuplicateEdge(0, 1).to_string().contains("duplicate edge"));
    }

    #[test]
    fn degrees_examples() {
        let raw = |t: &Tree| t.degrees().into_iter().map(Degree::get).collect::<Vec<_>>();
        assert_eq!(raw(&Tree::path(2)), vec![1, 1]);
        assert_eq!(raw(&Tree::star(3)), vec![3, 1, 1, 1]);
        assert_eq!(raw(&Tree::path(4)), vec![1, 2, 2, 1]);
    }

    #[test]
    fn internal_degree_sequence_examples() {
        assert_eq!(Tree::path(4).internal_degree_sequence().as_slice(), &[2, 2]);
        assert_eq!(Tree::star(3).internal_degree_sequence().as_slice(), &[3]);
        assert!(Tree::path(2).internal_degree_sequence().is_empty());
    }

    #[test]
    fn sombor_examples() {
        assert!((Tree::path(2).sombor() - 2f64.sqrt()).abs() < 1e-15);
        assert!((Tree::star(3).sombor() - 3.0 * 10f64.sqrt()).abs() < 1e-12);
        assert!((Tree::star(3).sombor() - 9.486_832_981).abs() < 1e-9);
        assert!((Tree::path(4).sombor() - 7.300_563_080).abs() < 1e-9);
    }

    #[test]
    fn index_examples() {
        let k2 = Tree::path(2);
        assert_eq!(k2.index(&edge_weight), k2.sombor());
        let ones = |_: Degree, _: Degree| 1.0;
        assert_eq!(Tree::star(6).index(&ones), 6.0);
        assert_eq!(Tree::path(4).index(&DegreeIndex::SecondZagreb), 8.0);
        // M1 of P4 = 1 + 4 + 4 + 1
        assert_eq!(Tree::path(4).index(&DegreeIndex::FirstZagreb), 10.0);
        // Randić of a star K_{1,m} is √m
        assert!((Tree::star(9).index(&DegreeIndex::Randic) - 3.0).abs() < 1e-12);
        assert_eq!(Tree::star(9).index(&DegreeIndex::Sombor), Tree::star(9).sombor());
    }

    #[test]
    fn path_between_and_bfs() {
        let t = Tree::new(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(t.path_between(0, 4), vec![0, 1, 3, 4]);
        assert_eq!(t.path_between(2, 2), vec![2]);
        let (order, parent) = t.bfs(1);
        assert_eq!(order, vec![1, 0, 2, 3, 4]);
        assert_eq!(parent[4], Some(3));
        assert_eq!(parent[1], None);
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut s = CompensatedSum::default();
        for x in [1e16, 1.0, -1e16, 1.0] {
            s.add(x);
        }
        assert_eq!(s.value(), 2.0);
    }
}
