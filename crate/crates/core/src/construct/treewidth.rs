//! Tree decompositions of width at most the cocircumference.
//!
//! Root a depth-first search tree `T` at `r`. The bag of `r` is `{r}`; the
//! bag of any other node `u` is the parent of `u` together with every
//! descendant of `u` (including `u`) that has a neighbour among the proper
//! ancestors of `u`. The edges of `G` leaving the subtree of `u` form a bond
//! `F_u`, and each bag vertex other than the parent owns a distinct edge of
//! `F_u`, so `|X_u| - 1 <= |F_u|`.

use crate::bonds::{is_bond, Bond};
use crate::decomp::{Bag, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{components, dfs_tree, Edge, Graph, RootedTree};

/// A DFS tree decomposition with one bond per non-root bag.
///
/// Node `u` of the decomposition is vertex `u` of the graph; the
/// decomposition tree is the DFS tree.
#[derive(Debug, Clone)]
pub struct CertifiedTreeDecomposition {
    pub decomposition: TreeDecomposition,
    pub dfs: RootedTree,
    /// `certificates[u]` is `F_u`; `None` only at the root.
    pub certificates: Vec<Option<Bond>>,
}

impl CertifiedTreeDecomposition {
    pub fn root(&self) -> usize {
        self.dfs.root
    }

    pub fn width(&self) -> usize {
        self.decomposition.width().unwrap_or(0)
    }

    /// Largest certificate bond; a lower bound on the cocircumference that
    /// already dominates the width.
    pub fn max_certificate(&self) -> usize {
        self.certificates
            .iter()
            .flatten()
            .map(Bond::len)
            .max()
            .unwrap_or(0)
    }
}

/// DFS tree decomposition rooted at the smallest vertex.
pub fn dfs_tree_decomposition(g: &Graph) -> Result<CertifiedTreeDecomposition> {
    dfs_tree_decomposition_from(g, 0)
}

/// DFS tree decomposition rooted at `root`.
pub fn dfs_tree_decomposition_from(g: &Graph, root: usize) -> Result<CertifiedTreeDecomposition> {
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    let t = dfs_tree(g, root)?;
    let n = g.n();

    let mut bags: Vec<Bag> = vec![Bag::new(); n];
    bags[root].insert(root);
    for u in 0..n {
        if let Some(p) = t.parent[u] {
            bags[u].insert(p);
        }
    }
    // d joins X_u for every u on the tree path from d up to (excluding) its
    // highest neighbour among its proper ancestors.
    for d in 0..n {
        let top = g
            .neighbors(d)
            .iter()
            .copied()
            .filter(|&a| t.is_proper_ancestor(a, d))
            .min_by_key(|&a| t.depth[a]);
        if let Some(a) = top {
            let mut u = d;
            while u != a {
                bags[u].insert(d);
                u = t.parent[u].expect("walk stays below an ancestor");
            }
        }
    }

    let mut certificates = vec![None; n];
    for u in 0..n {
        if u == root {
            continue;
        }
        let crossing: Vec<Edge> = g
            .edges()
            .iter()
            .copied()
            .filter(|e| t.is_ancestor(u, e.0) != t.is_ancestor(u, e.1))
            .collect();
        let bond = is_bond(g, &crossing)?.ok_or_else(|| {
            Error::InternalInvariantBroken(format!("edges leaving the subtree of {u} are not a bond"))
        })?;
        if bags[u].len() - 1 > bond.len() {
            return Err(Error::InternalInvariantBroken(format!(
                "bag of {u} has {} vertices but its bond only {} edges",
                bags[u].len(),
                bond.len()
            )));
        }
        certificates[u] = Some(bond);
    }

    let tree = (0..n)
        .map(|u| {
            let mut ns = t.children(u);
            if let Some(p) = t.parent[u] {
                ns.push(p);
            }
            ns.sort_unstable();
            ns
        })
        .collect();
    Ok(CertifiedTreeDecomposition {
        decomposition: TreeDecomposition { tree, bags },
        dfs: t,
        certificates,
    })
}

/// A tree decomposition of a possibly disconnected graph, one certificate
/// per node.
#[derive(Debug, Clone)]
pub struct ComposedTreeDecomposition {
    pub decomposition: TreeDecomposition,
    /// Bond paying for each node's bag; `None` for component roots.
    pub certificates: Vec<Option<Bond>>,
}

impl ComposedTreeDecomposition {
    pub fn width(&self) -> usize {
        self.decomposition.width().unwrap_or(0)
    }
}

/// Runs the DFS construction on every component (rooted at its smallest
/// vertex) and links the component trees to node `0`.
///
/// Nodes are listed component by component, each in DFS preorder, so the
/// root of the first component is node `0`. A component without edges is a
/// single bag.
pub fn composed_tree_decomposition(g: &Graph) -> Result<ComposedTreeDecomposition> {
    if g.n() == 0 {
        return Err(Error::EmptyDecomposition);
    }
    let mut bags: Vec<Bag> = Vec::new();
    let mut tree: Vec<Vec<usize>> = Vec::new();
    let mut certificates = Vec::new();
    for comp in components(g) {
        let base = bags.len();
        if comp.len() == 1 {
            bags.push(Bag::from([comp[0]]));
            tree.push(Vec::new());
            certificates.push(None);
        } else {
            let sub = g.induced(&comp);
            let c = dfs_tree_decomposition(&sub.graph)?;
            let mut node = vec![0; sub.graph.n()];
            for (i, &u) in c.dfs.preorder.iter().enumerate() {
                node[u] = base + i;
            }
            for &u in &c.dfs.preorder {
                bags.push(c.decomposition.bags[u].iter().map(|&v| sub.lift(v)).collect());
                tree.push(c.decomposition.tree[u].iter().map(|&w| node[w]).collect());
                let cert = match &c.certificates[u] {
                    Some(b) => {
                        let edges: Vec<Edge> = b.edges.iter().map(|&e| sub.lift_edge(e)).collect();
                        let lifted = is_bond(g, &edges)?.ok_or_else(|| {
                            Error::InternalInvariantBroken("lifted certificate is not a bond".into())
                        })?;
                        Some(lifted)
                    }
                    None => None,
                };
                certificates.push(cert);
            }
        }
        if base > 0 {
            tree[0].push(base);
            tree[base].push(0);
        }
    }
    for ns in &mut tree {
        ns.sort_unstable();
    }
    Ok(ComposedTreeDecomposition {
        decomposition: TreeDecomposition { tree, bags },
        certificates,
    })
}
