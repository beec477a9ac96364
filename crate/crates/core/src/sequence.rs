//! Internal-vertex degree sequences.
//!
//! A tree's degree sequence is written without its pendant vertices and in
//! non-increasing order, so `(3, 2)` stands for the five-vertex tree with
//! degrees `3, 2, 1, 1, 1`. The empty sequence stands for `K₂`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("degree entries must be positive, got {0}")]
    NonPositive(i64),
    #[error("cannot parse degree entry {0:?}")]
    Parse(String),
    #[error("the empty sequence has no internal vertices")]
    Degenerate,
    #[error("degree sequence is too large: {0}")]
    Overflow(String),
}

/// Validated internal degrees: every entry is at least 2 and the list is sorted
/// non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u32>")]
pub struct DegreeSequence(Vec<u32>);

impl DegreeSequence {
    /// Drops pendant entries (1s) and sorts the rest non-increasing.
    pub fn normalize<I>(raw: I) -> Result<Self, SequenceError>
    where
        I: IntoIterator,
        I::Item: Into<i64>,
    {
        let mut degrees = Vec::new();
        for entry in raw {
            let entry = entry.into();
            if entry <= 0 {
                return Err(SequenceError::NonPositive(entry));
            }
            let entry = u32::try_from(entry).map_err(|_| SequenceError::Overflow(format!("entry {entry}")))?;
            if entry > 1 {
                degrees.push(entry);
            }
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence(degrees))
    }

    pub fn empty() -> Self {
        DegreeSequence(Vec::new())
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Number of internal vertices `k`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.0.first().copied()
    }

    /// Number of pendant vertices of any tree realizing the sequence,
    /// `Σdᵢ − 2k + 2`. Fails on the empty sequence, whose `K₂` convention is
    /// handled by [`total_vertices`](Self::total_vertices).
    pub fn leaf_count(&self) -> Result<usize, SequenceError> {
        if self.0.is_empty() {
            return Err(SequenceError::Degenerate);
        }
        let sum: usize = self.0.iter().map(|&d| d as usize).sum();
        Ok(sum + 2 - 2 * self.0.len())
    }

    /// `k + leaf_count`, or 2 for the empty sequence.
    pub fn total_vertices(&self) -> usize {
        match self.leaf_count() {
            Ok(leaves) => self.0.len() + leaves,
            Err(_) => 2,
        }
    }

    /// Full degree vector: internal degrees in order, then one `1` per leaf.
    pub fn full_degrees(&self) -> Vec<u32> {
        let n = self.total_vertices();
        let mut out = self.0.clone();
        out.resize(n, 1);
        out
    }

    /// The sequence with its last (smallest) entry removed.
    pub fn without_last(&self) -> Self {
        let mut degrees = self.0.clone();
        degrees.pop();
        DegreeSequence(degrees)
    }

    /// Every valid sequence realized by a tree on at most `max_vertices`
    /// vertices, in lexicographic order of the internal degrees. The empty
    /// sequence comes first.
    pub fn all_up_to(max_vertices: usize) -> Vec<DegreeSequence> {
        fn extend(prefix: &mut Vec<u32>, sum: usize, max_vertices: usize, out: &mut Vec<DegreeSequence>) {
            let cap = prefix.last().copied().unwrap_or(u32::MAX);
            // Appending d gives n = (sum + d) − (k + 1) + 2.
            let base = sum + 1 - prefix.len();
            if base + 2 > max_vertices {
                return;
            }
            let largest = (max_vertices - base).min(cap as usize) as u32;
            for d in 2..=largest {
                prefix.push(d);
                out.push(DegreeSequence(prefix.clone()));
                extend(prefix, sum + d as usize, max_vertices, out);
                prefix.pop();
            }
        }

        let mut out = Vec::new();
        if max_vertices >= 2 {
            out.push(DegreeSequence::empty());
            extend(&mut Vec::new(), 0, max_vertices, &mut out);
        }
        out.sort();
        out
    }
}

impl TryFrom<Vec<i64>> for DegreeSequence {
    type Error = SequenceError;
    fn try_from(raw: Vec<i64>) -> Result<Self, Self::Error> {
        DegreeSequence::normalize(raw)
    }
}

impl From<DegreeSequence> for Vec<u32> {
    fn from(d: DegreeSequence) -> Vec<u32> {
        d.0
    }
}

/// Comma- or whitespace-separated integers, e.g. `"4,3,3,2"`.
impl FromStr for DegreeSequence {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let entries = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i64>().map_err(|_| SequenceError::Parse(t.to_owned())))
            .collect::<Result<Vec<_>, _>>()?;
        DegreeSequence::normalize(entries)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}
