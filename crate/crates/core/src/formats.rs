//! Edge-list and graph6 input, and the certificate JSON model.
//!
//! Edge lists start with a header line `n m`, optionally followed by the
//! word `multigraph`, then `m` lines `u v` with 0-based vertices. Anything
//! after `#` on a line is ignored, as are blank lines.

use crate::bonds::Bond;
use crate::construct::pathwidth::EdgeBondCertificate;
use crate::construct::treewidth::ComposedTreeDecomposition;
use crate::decomp::{Bag, PathDecomposition, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, MultiGraph};
use serde::{Deserialize, Serialize};

pub const GRAPH6_HEADER: &str = ">>graph6<<";

/// A parsed input graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputGraph {
    Simple(Graph),
    Multi(MultiGraph),
}

impl InputGraph {
    pub fn n(&self) -> usize {
        match self {
            InputGraph::Simple(g) => g.n(),
            InputGraph::Multi(g) => g.n(),
        }
    }

    pub fn m(&self) -> usize {
        match self {
            InputGraph::Simple(g) => g.m(),
            InputGraph::Multi(g) => g.m(),
        }
    }

    /// The graph as a multigraph (a simple graph converts losslessly).
    pub fn to_multi(&self) -> MultiGraph {
        match self {
            InputGraph::Simple(g) => MultiGraph::from(g),
            InputGraph::Multi(g) => g.clone(),
        }
    }

    /// The simple graph, failing on a multigraph with parallel edges.
    pub fn to_simple(&self) -> Result<Graph> {
        match self {
            InputGraph::Simple(g) => Ok(g.clone()),
            InputGraph::Multi(g) if g.is_simple() => Ok(g.simplify()),
            InputGraph::Multi(g) => {
                let dup = g.edges().windows(2).find(|w| w[0] == w[1]).map(|w| w[0]).expect("not simple");
                Err(Error::DuplicateEdge(dup))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

/// Parses `text`, detecting graph6 by its header unless `format` is given.
pub fn parse_graph(text: &str, format: Option<Format>) -> Result<InputGraph> {
    let format = format.unwrap_or(if text.trim_start().starts_with(GRAPH6_HEADER) {
        Format::Graph6
    } else {
        Format::EdgeList
    });
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| Error::Parse("empty graph6 input".into()))?;
            parse_graph6(line).map(InputGraph::Simple)
        }
    }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::Parse(format!("line {line}: expected a non-negative integer, got {tok:?}")))
}

pub fn parse_edge_list(text: &str) -> Result<InputGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| Error::Parse("missing header line".into()))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let multi = match toks.as_slice() {
        [_, _] => false,
        [_, _, "multigraph"] => true,
        _ => return Err(Error::Parse(format!("line {hl}: header must be `n m [multigraph]`"))),
    };
    let n = parse_usize(toks[0], hl)?;
    let m = parse_usize(toks[1], hl)?;
    let mut edges = Vec::with_capacity(m);
    for (ln, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse(format!("line {ln}: expected `u v`")));
        }
        edges.push((parse_usize(toks[0], ln)?, parse_usize(toks[1], ln)?));
    }
    if edges.len() != m {
        return Err(Error::Parse(format!("header announces {m} edges, found {}", edges.len())));
    }
    if multi {
        MultiGraph::new(n, edges).map(InputGraph::Multi)
    } else {
        Graph::new(n, edges).map(InputGraph::Simple)
    }
}

fn write_edges(n: usize, edges: &[Edge], multi: bool) -> String {
    let mut s = format!("{n} {}{}\n", edges.len(), if multi { " multigraph" } else { "" });
    for e in edges {
        s.push_str(&format!("{} {}\n", e.0, e.1));
    }
    s
}

pub fn write_edge_list(g: &Graph) -> String {
    write_edges(g.n(), g.edges(), false)
}

pub fn write_multigraph_edge_list(g: &MultiGraph) -> String {
    write_edges(g.n(), g.edges(), true)
}

/// Decodes one graph6 line, with or without the `>>graph6<<` header.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let body = line.trim().strip_prefix(GRAPH6_HEADER).unwrap_or(line.trim()).as_bytes();
    if let Some(&b) = body.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("invalid graph6 byte {b:#x}")));
    }
    let (n, rest) = match body {
        [] => return Err(Error::Parse("empty graph6 string".into())),
        [126, 126, ..] => return Err(Error::Parse("graph6 orders above 258047 are not supported".into())),
        [126, a, b, c, rest @ ..] => (
            ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63),
            rest,
        ),
        [126, ..] => return Err(Error::Parse("truncated graph6 order".into())),
        [a, rest @ ..] => (*a as usize - 63, rest),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    if rest.len() != pairs.div_ceil(6) {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {} for {n} vertices",
            rest.len(),
            pairs.div_ceil(6)
        )));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// Encodes `g` as graph6, without header.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    let mut out: Vec<u8> = match n {
        0..=62 => vec![n as u8 + 63],
        63..=258_047 => vec![126, (n >> 12) as u8 + 63, ((n >> 6) & 63) as u8 + 63, (n & 63) as u8 + 63],
        _ => return Err(Error::BadParams("graph6 orders above 258047 are not supported".into())),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u8; pairs.div_ceil(6)];
    for e in g.edges() {
        let k = e.1 * (e.1 - 1) / 2 + e.0;
        bits[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(bits.iter().map(|b| b + 63));
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertificateType {
    #[serde(rename = "tree-decomposition")]
    TreeDecomposition,
    #[serde(rename = "path-decomposition")]
    PathDecomposition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundKind {
    #[serde(rename = "cc")]
    Cocircumference,
    #[serde(rename = "3F-2")]
    ThreeFMinusTwo,
    #[serde(rename = "3F-3")]
    ThreeFMinusThree,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundJson {
    pub kind: BoundKind,
    pub value: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BondJson {
    pub edges: Vec<[usize; 2]>,
    pub side1: Vec<usize>,
    pub side2: Vec<usize>,
}

impl From<&Bond> for BondJson {
    fn from(b: &Bond) -> Self {
        BondJson {
            edges: b.edges.iter().map(|e| [e.0, e.1]).collect(),
            side1: b.side1.clone(),
            side2: b.side2.clone(),
        }
    }
}

impl BondJson {
    pub fn edge_list(&self) -> Vec<Edge> {
        let mut v: Vec<Edge> = self.edges.iter().map(|&[a, b]| Edge::new(a, b)).collect();
        v.sort_unstable();
        v
    }
}

/// A decomposition with the bonds that bound its width.
///
/// For tree decompositions, `bonds` lists one bond per bag of size at least
/// two, in node order. For path decompositions it holds the single bond `F`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    #[serde(rename = "type")]
    pub kind: CertificateType,
    pub width: usize,
    pub bags: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tree_edges: Option<Vec<[usize; 2]>>,
    pub bonds: Vec<BondJson>,
    pub bound: BoundJson,
}

fn bag_lists(bags: &[Bag]) -> Vec<Vec<usize>> {
    bags.iter().map(|b| b.iter().copied().collect()).collect()
}

fn to_bags(lists: &[Vec<usize>]) -> Vec<Bag> {
    lists.iter().map(|b| b.iter().copied().collect()).collect()
}

impl Certificate {
    /// Tree certificate with bound `cc_bound`, which should be the
    /// cocircumference or, when that is out of reach, the largest bond
    /// listed.
    pub fn from_tree(c: &ComposedTreeDecomposition, cc_bound: usize) -> Certificate {
        Certificate {
            kind: CertificateType::TreeDecomposition,
            width: c.width(),
            bags: bag_lists(&c.decomposition.bags),
            tree_edges: Some(c.decomposition.tree_edges().into_iter().map(|(a, b)| [a, b]).collect()),
            bonds: c.certificates.iter().flatten().map(BondJson::from).collect(),
            bound: BoundJson {
                kind: BoundKind::Cocircumference,
                value: cc_bound,
            },
        }
    }

    pub fn from_path(c: &EdgeBondCertificate) -> Certificate {
        Certificate {
            kind: CertificateType::PathDecomposition,
            width: c.width(),
            bags: bag_lists(&c.pd.bags),
            tree_edges: None,
            bonds: vec![BondJson::from(&c.bond)],
            bound: BoundJson {
                kind: BoundKind::ThreeFMinusTwo,
                value: c.bound(),
            },
        }
    }

    pub fn path_decomposition(&self) -> PathDecomposition {
        PathDecomposition::new(to_bags(&self.bags))
    }

    /// The tree decomposition, or a parse error for malformed tree edges.
    pub fn tree_decomposition(&self) -> Result<TreeDecomposition> {
        let edges: Vec<(usize, usize)> = self
            .tree_edges
            .as_deref()
            .unwrap_or(&[])
            .iter()
            .map(|&[a, b]| (a, b))
            .collect();
        TreeDecomposition::from_edges(to_bags(&self.bags), &edges)
            .map_err(|v| Error::Parse(format!("certificate tree: {v}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let text = "# a triangle\n3 3\n0 1\n1 2 # closing\n\n0 2\n";
        let g = parse_graph(text, None).unwrap();
        let InputGraph::Simple(g) = g else { panic!("expected a simple graph") };
        assert_eq!(g.m(), 3);
        assert_eq!(write_edge_list(&g), "3 3\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn multigraph_header() {
        let g = parse_edge_list("2 3 multigraph\n0 1\n1 0\n0 1\n").unwrap();
        assert_eq!(g.m(), 3);
        assert!(matches!(g.to_simple(), Err(Error::DuplicateEdge(Edge(0, 1)))));
        assert_eq!(write_multigraph_edge_list(&g.to_multi()), "2 3 multigraph\n0 1\n0 1\n0 1\n");
        assert!(matches!(parse_edge_list("2 2\n0 1\n0 1\n"), Err(Error::DuplicateEdge(_))));
    }

    #[test]
    fn edge_list_errors() {
        for bad in ["", "3\n", "2 1 simple\n0 1\n", "2 2\n0 1\n", "2 1\n0 x\n", "2 1\n0 1 2\n"] {
            assert!(matches!(parse_edge_list(bad), Err(Error::Parse(_))), "{bad:?}");
        }
        assert!(matches!(parse_edge_list("2 1\n0 2\n"), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn graph6_known_strings() {
        // K4 and the path 0-1-2 in graph6
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!((k4.n(), k4.m()), (4, 6));
        let p = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(to_graph6(&p).unwrap(), "Bg");
        assert_eq!(parse_graph(">>graph6<<Bg\n", None).unwrap(), InputGraph::Simple(p));
        assert_eq!(to_graph6(&Graph::empty(0)).unwrap(), "?");
        assert!(parse_graph6("C~~").is_err());
        assert!(parse_graph6("C\x01").is_err());
    }

    #[test]
    fn graph6_large_order() {
        let g = Graph::new(70, (1..70).map(|i| (i - 1, i))).unwrap();
        let s = to_graph6(&g).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
