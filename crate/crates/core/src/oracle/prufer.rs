//! Prüfer codes: the bijection between labeled trees on `n` vertices and
//! sequences of `n − 2` labels, where vertex `v` appears `deg(v) − 1` times.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::OracleError;
use crate::sequence::DegreeSequence;
use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PruferCode(pub Vec<usize>);

impl PruferCode {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Reusable buffers for decoding many codes of the same length.
#[derive(Debug, Default)]
pub(crate) struct Decoder {
    degree: Vec<usize>,
    pub(crate) edges: Vec<(usize, usize)>,
}

impl Decoder {
    /// Decodes into `self.edges`. The code must already be validated.
    pub(crate) fn decode(&mut self, code: &[usize], n: usize) {
        self.degree.clear();
        self.degree.resize(n, 1);
        self.edges.clear();
        for &v in code {
            self.degree[v] += 1;
        }
        let mut ptr = 0;
        while self.degree[ptr] != 1 {
            ptr += 1;
        }
        let mut leaf = ptr;
        for &v in code {
            self.edges.push((leaf, v));
            self.degree[v] -= 1;
            if self.degree[v] == 1 && v < ptr {
                leaf = v;
            } else {
                ptr += 1;
                while self.degree[ptr] != 1 {
                    ptr += 1;
                }
                leaf = ptr;
            }
        }
        self.edges.push((leaf, n - 1));
    }
}

/// The tree on `n` vertices whose Prüfer code is `code`.
pub fn prufer_decode(code: &PruferCode, n: usize) -> Result<Tree, OracleError> {
    if n < 2 || code.len() != n - 2 {
        return Err(OracleError::InvalidCode(format!("length {} does not fit n = {n}", code.len())));
    }
    if let Some(&bad) = code.0.iter().find(|&&v| v >= n) {
        return Err(OracleError::InvalidCode(format!("label {bad} out of range for n = {n}")));
    }
    let mut decoder = Decoder::default();
    decoder.decode(&code.0, n);
    Ok(Tree::from_edges_unchecked(n, decoder.edges))
}

/// The Prüfer code of `tree`; inverse of [`prufer_decode`].
pub fn prufer_encode(tree: &Tree) -> PruferCode {
    let n = tree.vertex_count();
    let (_, parent) = tree.bfs(n - 1);
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut code = Vec::with_capacity(n.saturating_sub(2));
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for _ in 0..n.saturating_sub(2) {
        let next = parent[leaf].expect("only the root lacks a parent, and it is never removed");
        code.push(next);
        degree[next] -= 1;
        if degree[next] == 1 && next < ptr {
            leaf = next;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    PruferCode(code)
}

/// The Prüfer multiset for `degrees` with internal vertex `i` given degree `dᵢ`,
/// sorted ascending.
pub fn prufer_multiset(degrees: &DegreeSequence) -> Vec<usize> {
    degrees.as_slice().iter().enumerate().flat_map(|(i, &d)| std::iter::repeat(i).take(d as usize - 1)).collect()
}

pub fn random_prufer_code<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PruferCode {
    PruferCode((0..n.saturating_sub(2)).map(|_| rng.random_range(0..n)).collect())
}

/// A uniformly random labeled tree on `n ≥ 2` vertices.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tree {
    prufer_decode(&random_prufer_code(n, rng), n).expect("random codes are valid")
}

/// A uniformly random labeled tree in which vertex `i < k` has degree `dᵢ`.
pub fn random_tree_with_degrees<R: Rng + ?Sized>(degrees: &DegreeSequence, rng: &mut R) -> Tree {
    let mut code = prufer_multiset(degrees);
    code.shuffle(rng);
    prufer_decode(&PruferCode(code), degrees.total_vertices()).expect("multiset codes are valid")
}
