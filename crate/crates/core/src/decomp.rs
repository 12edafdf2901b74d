//! Tree and path decompositions, their validators and width.

use crate::error::{Error, Result};
use crate::graph::{Edge, GraphView};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error as ThisError;

pub type Bag = BTreeSet<usize>;

/// Why a bag family fails to be a decomposition of a given graph.
///
/// Validators report the first failing check in the order the variants are
/// listed, with the smallest witness for that check.
#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum Violation {
    #[error("decomposition has no bags")]
    NoBags,
    #[error("decomposition tree is malformed: {0}")]
    MalformedTree(String),
    #[error("bag {node} mentions vertex {vertex}, which is not in the graph")]
    UnknownVertex { node: usize, vertex: usize },
    #[error("vertex {0} appears in no bag")]
    VertexUncovered(usize),
    #[error("no bag contains both ends of edge {0}")]
    EdgeUncovered(Edge),
    /// For trees: the nodes containing the vertex do not induce a subtree.
    #[error("bags containing vertex {0} are not contiguous")]
    VertexInterval(usize),
    #[error("vertex {0} is missing from the first bag")]
    RootMissing(usize),
    #[error("vertex {0} is missing from the last bag")]
    LastMissing(usize),
}

fn max_bag_width(bags: &[Bag]) -> Result<usize> {
    match bags.iter().map(BTreeSet::len).max() {
        Some(0) | None => Err(Error::EmptyDecomposition),
        Some(k) => Ok(k - 1),
    }
}

/// A tree decomposition: node `i` has bag `bags[i]` and neighbours `tree[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    pub tree: Vec<Vec<usize>>,
    pub bags: Vec<Bag>,
}

impl TreeDecomposition {
    pub fn width(&self) -> Result<usize> {
        max_bag_width(&self.bags)
    }

    /// Tree edges `(a, b)` with `a < b`, ascending.
    pub fn tree_edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .tree
            .iter()
            .enumerate()
            .flat_map(|(a, ns)| ns.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Builds a decomposition from bags and an undirected tree edge list.
    pub fn from_edges(bags: Vec<Bag>, edges: &[(usize, usize)]) -> std::result::Result<Self, Violation> {
        let mut tree = vec![Vec::new(); bags.len()];
        for &(a, b) in edges {
            if a >= bags.len() || b >= bags.len() || a == b {
                return Err(Violation::MalformedTree(format!("bad tree edge ({a}, {b})")));
            }
            tree[a].push(b);
            tree[b].push(a);
        }
        for ns in &mut tree {
            ns.sort_unstable();
        }
        Ok(TreeDecomposition { tree, bags })
    }
}

/// A path decomposition `(X_0, ..., X_s)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathDecomposition {
    pub bags: Vec<Bag>,
}

impl PathDecomposition {
    pub fn new(bags: Vec<Bag>) -> Self {
        PathDecomposition { bags }
    }

    pub fn from_slices(bags: &[&[usize]]) -> Self {
        PathDecomposition {
            bags: bags.iter().map(|b| b.iter().copied().collect()).collect(),
        }
    }

    pub fn width(&self) -> Result<usize> {
        max_bag_width(&self.bags)
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    /// Union of all bags.
    pub fn vertices(&self) -> Bag {
        self.bags.iter().flatten().copied().collect()
    }

    pub fn reversed(&self) -> Self {
        PathDecomposition {
            bags: self.bags.iter().rev().cloned().collect(),
        }
    }

    /// Adds `v` to every bag.
    pub fn with_everywhere(&self, v: usize) -> Self {
        PathDecomposition {
            bags: self
                .bags
                .iter()
                .map(|b| {
                    let mut b = b.clone();
                    b.insert(v);
                    b
                })
                .collect(),
        }
    }

    /// Renames every vertex through `f`.
    pub fn map_vertices(&self, f: impl Fn(usize) -> usize) -> Self {
        PathDecomposition {
            bags: self
                .bags
                .iter()
                .map(|b| b.iter().map(|&v| f(v)).collect())
                .collect(),
        }
    }

    /// Index of the first bag containing `v`.
    pub fn first_appearance(&self, v: usize) -> Option<usize> {
        self.bags.iter().position(|b| b.contains(&v))
    }

    /// The same bags as a tree decomposition on a path.
    pub fn to_tree(&self) -> TreeDecomposition {
        let k = self.bags.len();
        let tree = (0..k)
            .map(|i| {
                let mut ns = Vec::new();
                if i > 0 {
                    ns.push(i - 1);
                }
                if i + 1 < k {
                    ns.push(i + 1);
                }
                ns
            })
            .collect();
        TreeDecomposition {
            tree,
            bags: self.bags.clone(),
        }
    }
}

fn check_vertices<G: GraphView + ?Sized>(g: &G, bags: &[Bag]) -> std::result::Result<(), Violation> {
    let n = g.vertex_count();
    let bad = bags
        .iter()
        .enumerate()
        .flat_map(|(node, b)| b.iter().filter(|&&v| v >= n).map(move |&v| (v, node)))
        .min();
    if let Some((vertex, node)) = bad {
        return Err(Violation::UnknownVertex { node, vertex });
    }
    let mut covered = vec![false; n];
    for b in bags {
        for &v in b {
            covered[v] = true;
        }
    }
    if let Some(v) = covered.iter().position(|c| !c) {
        return Err(Violation::VertexUncovered(v));
    }
    for &e in g.edge_list() {
        if !bags.iter().any(|b| b.contains(&e.0) && b.contains(&e.1)) {
            return Err(Violation::EdgeUncovered(e));
        }
    }
    Ok(())
}

fn check_tree_shape(d: &TreeDecomposition) -> std::result::Result<(), Violation> {
    let k = d.bags.len();
    if d.tree.len() != k {
        return Err(Violation::MalformedTree(format!(
            "{} adjacency lists for {} bags",
            d.tree.len(),
            k
        )));
    }
    let mut degree_sum = 0;
    for (a, ns) in d.tree.iter().enumerate() {
        for &b in ns {
            if b >= k || b == a || !d.tree[b].contains(&a) {
                return Err(Violation::MalformedTree(format!("bad tree edge ({a}, {b})")));
            }
        }
        degree_sum += ns.len();
    }
    if degree_sum != 2 * (k - 1) {
        return Err(Violation::MalformedTree(format!(
            "{} edges on {} nodes",
            degree_sum / 2,
            k
        )));
    }
    let mut seen = vec![false; k];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(a) = stack.pop() {
        for &b in &d.tree[a] {
            if !seen[b] {
                seen[b] = true;
                stack.push(b);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Violation::MalformedTree("tree is disconnected".into()));
    }
    Ok(())
}

/// Checks the three tree-decomposition conditions against `g`.
/// Multigraphs are checked through their distinct edges.
pub fn validate_tree_decomposition<G: GraphView + ?Sized>(
    g: &G,
    d: &TreeDecomposition,
) -> std::result::Result<(), Violation> {
    if d.bags.is_empty() {
        return Err(Violation::NoBags);
    }
    check_tree_shape(d)?;
    check_vertices(g, &d.bags)?;
    for v in 0..g.vertex_count() {
        let holds: Vec<bool> = d.bags.iter().map(|b| b.contains(&v)).collect();
        let start = holds.iter().position(|&h| h).unwrap();
        let mut seen = vec![false; d.bags.len()];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(a) = stack.pop() {
            for &b in &d.tree[a] {
                if holds[b] && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        if holds.iter().zip(&seen).any(|(&h, &s)| h && !s) {
            return Err(Violation::VertexInterval(v));
        }
    }
    Ok(())
}

/// Checks a path decomposition of `g`, optionally requiring `first` in the
/// first bag and `last` in the last bag.
pub fn validate_path_decomposition<G: GraphView + ?Sized>(
    g: &G,
    d: &PathDecomposition,
    first: Option<usize>,
    last: Option<usize>,
) -> std::result::Result<(), Violation> {
    if d.bags.is_empty() {
        return Err(Violation::NoBags);
    }
    check_vertices(g, &d.bags)?;
    for v in 0..g.vertex_count() {
        let idx: Vec<usize> = (0..d.bags.len()).filter(|&i| d.bags[i].contains(&v)).collect();
        if idx.last().unwrap() - idx[0] + 1 != idx.len() {
            return Err(Violation::VertexInterval(v));
        }
    }
    if let Some(x) = first {
        if !d.bags[0].contains(&x) {
            return Err(Violation::RootMissing(x));
        }
    }
    if let Some(y) = last {
        if !d.bags[d.bags.len() - 1].contains(&y) {
            return Err(Violation::LastMissing(y));
        }
    }
    Ok(())
}

/// Drops every bag contained in a neighbouring bag, keeping at least one.
///
/// A dropped first bag is a subset of the new first bag, so first/last bag
/// constraints survive.
pub fn strip_redundant_bags(d: &PathDecomposition) -> PathDecomposition {
    let mut bags = d.bags.clone();
    let mut i = 0;
    while bags.len() > 1 && i < bags.len() {
        let covered = (i > 0 && bags[i].is_subset(&bags[i - 1]))
            || (i + 1 < bags.len() && bags[i].is_subset(&bags[i + 1]));
        if covered {
            bags.remove(i);
            i = i.saturating_sub(1);
        } else {
            i += 1;
        }
    }
    PathDecomposition { bags }
}
