use super::{Graph, GraphView};
use crate::error::{Error, Result};

/// Connected components, each sorted ascending, listed by smallest member.
pub fn components<G: GraphView + ?Sized>(g: &G) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Vertices reachable from `s`, ascending.
pub fn component_containing<G: GraphView + ?Sized>(g: &G, s: usize) -> Vec<usize> {
    let mut seen = vec![false; g.vertex_count()];
    let mut comp = vec![s];
    seen[s] = true;
    let mut i = 0;
    while i < comp.len() {
        let v = comp[i];
        i += 1;
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                comp.push(w);
            }
        }
    }
    comp.sort_unstable();
    comp
}

/// True for graphs with exactly one component. The empty graph is not connected.
pub fn is_connected<G: GraphView + ?Sized>(g: &G) -> bool {
    g.vertex_count() > 0 && component_containing(g, 0).len() == g.vertex_count()
}

/// A rooted spanning tree with preorder timestamps for ancestor queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    pub root: usize,
    pub parent: Vec<Option<usize>>,
    pub depth: Vec<usize>,
    /// Vertices in DFS preorder.
    pub preorder: Vec<usize>,
    tin: Vec<usize>,
    tout: Vec<usize>,
}

impl RootedTree {
    /// `a` is an ancestor of `d` (every vertex is its own ancestor).
    pub fn is_ancestor(&self, a: usize, d: usize) -> bool {
        self.tin[a] <= self.tin[d] && self.tout[d] <= self.tout[a]
    }

    pub fn is_proper_ancestor(&self, a: usize, d: usize) -> bool {
        a != d && self.is_ancestor(a, d)
    }

    /// Vertices of the subtree rooted at `u`, in preorder.
    pub fn subtree(&self, u: usize) -> &[usize] {
        &self.preorder[self.tin[u]..self.tout[u]]
    }

    pub fn children(&self, u: usize) -> Vec<usize> {
        self.subtree(u)
            .iter()
            .copied()
            .filter(|&v| self.parent[v] == Some(u))
            .collect()
    }
}

/// Depth-first search tree from `root`, visiting neighbours in ascending order.
///
/// Every non-tree edge of `g` joins an ancestor-descendant pair.
pub fn dfs_tree(g: &Graph, root: usize) -> Result<RootedTree> {
    let n = g.n();
    if root >= n {
        return Err(Error::VertexOutOfRange { vertex: root, n });
    }
    let mut parent = vec![None; n];
    let mut depth = vec![0; n];
    let mut tin = vec![usize::MAX; n];
    let mut tout = vec![0; n];
    let mut preorder = Vec::with_capacity(n);

    tin[root] = 0;
    preorder.push(root);
    let mut stack = vec![(root, 0usize)];
    while let Some(&mut (v, ref mut next)) = stack.last_mut() {
        let nbrs = g.neighbors(v);
        if *next < nbrs.len() {
            let w = nbrs[*next];
            *next += 1;
            if tin[w] == usize::MAX {
                tin[w] = preorder.len();
                preorder.push(w);
                parent[w] = Some(v);
                depth[w] = depth[v] + 1;
                stack.push((w, 0));
            }
        } else {
            tout[v] = preorder.len();
            stack.pop();
        }
    }
    if preorder.len() != n {
        return Err(Error::DisconnectedInput);
    }
    Ok(RootedTree {
        root,
        parent,
        depth,
        preorder,
        tin,
        tout,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                e.push((a, b));
            }
        }
        Graph::new(n, e).unwrap()
    }

    #[test]
    fn components_examples() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(components(&g), vec![vec![0, 1], vec![2, 3]]);
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(components(&c4), vec![vec![0, 1, 2, 3]]);
        assert_eq!(components(&Graph::empty(3)), vec![vec![0], vec![1], vec![2]]);
        assert!(!is_connected(&Graph::empty(0)));
    }

    #[test]
    fn dfs_on_k4_is_a_path() {
        let t = dfs_tree(&complete(4), 0).unwrap();
        assert_eq!(t.parent, vec![None, Some(0), Some(1), Some(2)]);
        assert_eq!(t.depth, vec![0, 1, 2, 3]);
    }

    #[test]
    fn dfs_on_c4_has_one_back_edge() {
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let t = dfs_tree(&c4, 0).unwrap();
        assert_eq!(t.preorder, vec![0, 1, 2, 3]);
        let back: Vec<Edge> = c4
            .edges()
            .iter()
            .copied()
            .filter(|e| t.parent[e.0] != Some(e.1) && t.parent[e.1] != Some(e.0))
            .collect();
        assert_eq!(back, vec![Edge(0, 3)]);
    }

    #[test]
    fn dfs_on_a_tree_reroots_it() {
        let g = Graph::new(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let t = dfs_tree(&g, 3).unwrap();
        assert_eq!(t.parent, vec![Some(1), Some(3), Some(1), None, Some(3)]);
        assert_eq!(t.subtree(1), &[1, 0, 2]);
        assert_eq!(t.children(3), vec![1, 4]);
    }

    #[test]
    fn dfs_rejects_disconnected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(dfs_tree(&g, 0), Err(Error::DisconnectedInput));
    }
}
