//! Text formats: the `n` / `u v` edge list, Graphviz DOT, and the JSON shape
//! `{"n": int, "edges": [[u, v], ...]}`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Tree, TreeError};

#[derive(Serialize, Deserialize)]
pub(super) struct TreeRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<TreeRepr> for Tree {
    type Error = TreeError;
    fn try_from(repr: TreeRepr) -> Result<Tree, TreeError> {
        Tree::new(repr.n, repr.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Tree> for TreeRepr {
    fn from(tree: Tree) -> TreeRepr {
        TreeRepr { n: tree.n, edges: tree.edges.iter().map(|&(u, v)| [u, v]).collect() }
    }
}

impl Tree {
    /// Parses the edge-list format: the vertex count on the first line, then
    /// one `u v` pair per line. Blank lines and `#` comments are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Tree, TreeError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let parse_err = |line, message: String| TreeError::Parse { line, message };
        let (first, header) = lines.next().ok_or_else(|| parse_err(1, "missing vertex count".into()))?;
        let n: usize =
            header.parse().map_err(|_| parse_err(first, format!("expected vertex count, got {header:?}")))?;

        let mut edges = Vec::new();
        for (line, content) in lines {
            let fields: Vec<&str> = content.split_whitespace().collect();
            let [u, v] = fields.as_slice() else {
                return Err(parse_err(line, format!("expected two vertex labels, got {content:?}")));
            };
            let label = |s: &str| s.parse::<usize>().map_err(|_| parse_err(line, format!("bad vertex label {s:?}")));
            edges.push((label(u)?, label(v)?));
        }
        Tree::new(n, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Undirected DOT graph; each vertex is labelled with its degree.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in 0..self.n {
            let _ = writeln!(out, "  {v} [label=\"{v}\\nd={}\"];", self.degree(v));
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}
