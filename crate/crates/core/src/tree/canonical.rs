//! Isomorphism-invariant encoding: AHU parenthesis strings rooted at the
//! centre. Bicentral trees take the smaller of the two rootings.

use super::Tree;

impl Tree {
    /// Vertices of minimum eccentricity: one centre, or two adjacent ones.
    pub fn centers(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut degree: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
        let mut removed = vec![false; n];
        let mut remaining = n;
        while remaining > 2 {
            remaining -= layer.len();
            for &leaf in &layer {
                removed[leaf] = true;
            }
            let mut next = Vec::new();
            for &leaf in &layer {
                for &w in self.neighbors(leaf) {
                    if !removed[w] {
                        degree[w] -= 1;
                        if degree[w] == 1 {
                            next.push(w);
                        }
                    }
                }
            }
            layer = next;
        }
        layer.sort_unstable();
        layer
    }

    /// Two trees get the same string iff they are isomorphic.
    pub fn canonical_form(&self) -> String {
        self.centers().into_iter().map(|c| self.rooted_encoding(c)).min().expect("every tree has a centre")
    }

    fn rooted_encoding(&self, root: usize) -> String {
        let (order, parent) = self.bfs(root);
        let mut codes: Vec<String> = vec![String::new(); self.vertex_count()];
        let mut child_codes: Vec<Vec<String>> = vec![Vec::new(); self.vertex_count()];
        for &v in order.iter().rev() {
            let mut kids = std::mem::take(&mut child_codes[v]);
            kids.sort_unstable();
            let mut code = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
            code.push('(');
            for k in &kids {
                code.push_str(k);
            }
            code.push(')');
            match parent[v] {
                Some(p) => child_codes[p].push(code),
                None => codes[v] = code,
            }
        }
        std::mem::take(&mut codes[root])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_path_matches() {
        let a = Tree::path(4);
        let b = Tree::new(4, [(3, 1), (1, 0), (0, 2)]).unwrap();
        assert_eq!(a.canonical_form(), b.canonical_form());
    }

    #[test]
    fn path_and_star_differ() {
        assert_ne!(Tree::path(4).canonical_form(), Tree::star(3).canonical_form());
    }

    #[test]
    fn reflexive() {
        let t = Tree::new(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        assert_eq!(t.canonical_form(), t.clone().canonical_form());
    }

    #[test]
    fn centers() {
        assert_eq!(Tree::path(5).centers(), vec![2]);
        assert_eq!(Tree::path(4).centers(), vec![1, 2]);
        assert_eq!(Tree::path(2).centers(), vec![0, 1]);
        assert_eq!(Tree::star(4).centers(), vec![0]);
    }

    #[test]
    fn distinguishes_same_degree_sequence() {
        // Both have internal degrees (3, 3, 2); the 2 sits between the 3s in one.
        let chain = Tree::new(7, [(0, 1), (1, 2), (0, 3), (0, 4), (2, 5), (2, 6)]).unwrap();
        let adjacent = Tree::new(7, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6)]).unwrap();
        assert_eq!(chain.internal_degree_sequence(), adjacent.internal_degree_sequence());
        assert_ne!(chain.canonical_form(), adjacent.canonical_form());
    }
}
