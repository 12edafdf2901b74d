//! Simple graphs, multigraphs and id-remapped subgraphs.
//!
//! Vertices are dense ids `0..n`. Edges are unordered pairs stored with the
//! smaller endpoint first; edge lists are kept sorted so iteration order is
//! deterministic everywhere.

mod blocks;
mod separation;
mod traverse;

pub use blocks::{blocks_and_cutvertices, has_cutvertex, is_two_connected, BlockTree};
pub use separation::{split_separation, Separation};
pub use traverse::{component_containing, components, dfs_tree, is_connected, RootedTree};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// An unordered vertex pair, normalized so that `.0 < .1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    /// Builds the normalized edge `{a, b}`. Does not reject `a == b`;
    /// graph constructors do.
    pub fn new(a: usize, b: usize) -> Edge {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint opposite `v`. `v` must be an endpoint.
    pub fn other(&self, v: usize) -> usize {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

/// Read-only structure shared by [`Graph`] and [`MultiGraph`].
pub trait GraphView {
    fn vertex_count(&self) -> usize;
    /// Distinct neighbours of `v`, ascending.
    fn neighbors(&self, v: usize) -> &[usize];
    /// All edges, sorted, parallel copies repeated.
    fn edge_list(&self) -> &[Edge];

    fn edge_count(&self) -> usize {
        self.edge_list().len()
    }
}

fn build_adjacency(n: usize, edges: &[Edge]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for e in edges {
        adj[e.0].push(e.1);
        adj[e.1].push(e.0);
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }
    adj
}

fn normalize_edges<I>(n: usize, edges: I) -> Result<Vec<Edge>>
where
    I: IntoIterator,
    I::Item: Into<Edge>,
{
    let mut out = Vec::new();
    for e in edges {
        let e: Edge = e.into();
        if e.1 >= n {
            return Err(Error::VertexOutOfRange { vertex: e.1, n });
        }
        if e.0 == e.1 {
            return Err(Error::SelfLoop(e.0));
        }
        out.push(e);
    }
    out.sort_unstable();
    Ok(out)
}

/// A finite simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a simple graph, rejecting loops, duplicates and out-of-range ids.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator,
        I::Item: Into<Edge>,
    {
        let edges = normalize_edges(n, edges)?;
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0]));
        }
        let adj = build_adjacency(n, &edges);
        Ok(Graph { n, adj, edges })
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.0, e.1)
    }

    /// `self + e`; returns a copy unchanged when `e` is already present.
    pub fn with_edge(&self, e: Edge) -> Result<Graph> {
        if self.contains_edge(e) {
            return Ok(self.clone());
        }
        Graph::new(self.n, self.edges.iter().copied().chain(std::iter::once(e)))
    }

    /// Same vertex set, with the given edges removed.
    pub fn without_edges(&self, removed: &[Edge]) -> Graph {
        let mut removed = removed.to_vec();
        removed.sort_unstable();
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .copied()
            .filter(|e| removed.binary_search(e).is_err())
            .collect();
        let adj = build_adjacency(self.n, &edges);
        Graph {
            n: self.n,
            adj,
            edges,
        }
    }

    /// Subgraph induced by `vertices`, relabelled to `0..k` in ascending
    /// order of the original ids.
    pub fn induced(&self, vertices: &[usize]) -> Subgraph {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let mut from_parent = vec![None; self.n];
        for (i, &v) in vs.iter().enumerate() {
            from_parent[v] = Some(i);
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|e| match (from_parent[e.0], from_parent[e.1]) {
                (Some(a), Some(b)) => Some(Edge::new(a, b)),
                _ => None,
            })
            .collect::<Vec<_>>();
        let graph = Graph {
            n: vs.len(),
            adj: build_adjacency(vs.len(), &edges),
            edges,
        };
        Subgraph {
            graph,
            to_parent: vs,
            from_parent,
        }
    }

    /// Subgraph formed by `edges` and their endpoints, relabelled in
    /// ascending order of the original ids.
    pub fn edge_subgraph(&self, edges: &[Edge]) -> Subgraph {
        let mut vs: Vec<usize> = edges.iter().flat_map(|e| [e.0, e.1]).collect();
        vs.sort_unstable();
        vs.dedup();
        let mut from_parent = vec![None; self.n];
        for (i, &v) in vs.iter().enumerate() {
            from_parent[v] = Some(i);
        }
        let mut local: Vec<Edge> = edges
            .iter()
            .map(|e| Edge::new(from_parent[e.0].unwrap(), from_parent[e.1].unwrap()))
            .collect();
        local.sort_unstable();
        local.dedup();
        let graph = Graph {
            n: vs.len(),
            adj: build_adjacency(vs.len(), &local),
            edges: local,
        };
        Subgraph {
            graph,
            to_parent: vs,
            from_parent,
        }
    }

    /// `G - v` with the remaining vertices relabelled.
    pub fn without_vertex(&self, v: usize) -> Subgraph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }
}

impl GraphView for Graph {
    fn vertex_count(&self) -> usize {
        self.n
    }
    fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }
    fn edge_list(&self) -> &[Edge] {
        &self.edges
    }
}

/// A loopless multigraph on vertices `0..n`; parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl MultiGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<MultiGraph>
    where
        I: IntoIterator,
        I::Item: Into<Edge>,
    {
        let edges = normalize_edges(n, edges)?;
        let adj = build_adjacency(n, &edges);
        Ok(MultiGraph { n, adj, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn multiplicity(&self, e: Edge) -> usize {
        let lo = self.edges.partition_point(|f| *f < e);
        let hi = self.edges.partition_point(|f| *f <= e);
        hi - lo
    }

    pub fn is_simple(&self) -> bool {
        self.edges.windows(2).all(|w| w[0] != w[1])
    }

    /// Underlying simple graph (parallel copies collapsed).
    pub fn simplify(&self) -> Graph {
        let mut edges = self.edges.clone();
        edges.dedup();
        Graph {
            n: self.n,
            adj: self.adj.clone(),
            edges,
        }
    }

    /// Removes one copy of `e`.
    pub fn without_edge_copy(&self, e: Edge) -> Result<MultiGraph> {
        let pos = self
            .edges
            .binary_search(&e)
            .map_err(|_| Error::EdgeNotInGraph(e))?;
        let mut edges = self.edges.clone();
        edges.remove(pos);
        let adj = build_adjacency(self.n, &edges);
        Ok(MultiGraph {
            n: self.n,
            adj,
            edges,
        })
    }
}

impl From<&Graph> for MultiGraph {
    fn from(g: &Graph) -> Self {
        MultiGraph {
            n: g.n,
            adj: g.adj.clone(),
            edges: g.edges.clone(),
        }
    }
}

impl GraphView for MultiGraph {
    fn vertex_count(&self) -> usize {
        self.n
    }
    fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }
    fn edge_list(&self) -> &[Edge] {
        &self.edges
    }
}

/// A relabelled subgraph together with its id translation tables.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: Graph,
    to_parent: Vec<usize>,
    from_parent: Vec<Option<usize>>,
}

impl Subgraph {
    /// Parent id of local vertex `v`.
    pub fn lift(&self, v: usize) -> usize {
        self.to_parent[v]
    }

    /// Local id of parent vertex `v`, if it survived.
    pub fn local(&self, v: usize) -> Option<usize> {
        self.from_parent.get(v).copied().flatten()
    }

    pub fn lift_edge(&self, e: Edge) -> Edge {
        Edge::new(self.to_parent[e.0], self.to_parent[e.1])
    }

    /// Parent ids of all local vertices, ascending.
    pub fn parent_vertices(&self) -> &[usize] {
        &self.to_parent
    }
}
