use super::Tree;

/// A tree with a chosen root, its parent map, and breadth-first order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    tree: Tree,
    root: usize,
    parent: Vec<Option<usize>>,
    bfs_order: Vec<usize>,
    depth: Vec<usize>,
}

impl RootedTree {
    pub fn new(tree: Tree, root: usize) -> RootedTree {
        assert!(root < tree.vertex_count(), "root {root} out of range");
        let (bfs_order, parent) = tree.bfs(root);
        let mut depth = vec![0; tree.vertex_count()];
        for &v in &bfs_order {
            if let Some(p) = parent[v] {
                depth[v] = depth[p] + 1;
            }
        }
        RootedTree { tree, root, parent, bfs_order, depth }
    }

    /// Roots at a vertex of maximum degree, lowest label among ties.
    pub fn at_max_degree(tree: Tree) -> RootedTree {
        let root = (0..tree.vertex_count())
            .max_by_key(|&v| (tree.degree(v), std::cmp::Reverse(v)))
            .expect("trees are nonempty");
        RootedTree::new(tree, root)
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn into_tree(self) -> Tree {
        self.tree
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    pub fn bfs_order(&self) -> &[usize] {
        &self.bfs_order
    }

    pub fn children(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let parent = self.parent[v];
        self.tree.neighbors(v).iter().copied().filter(move |&w| Some(w) != parent)
    }
}

impl AsRef<Tree> for RootedTree {
    fn as_ref(&self) -> &Tree {
        &self.tree
    }
}

impl AsRef<Tree> for Tree {
    fn as_ref(&self) -> &Tree {
        self
    }
}
