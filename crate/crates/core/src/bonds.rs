//! Bonds: minimal edge cuts, recognized through connected bipartitions.
//!
//! An edge set `F` is a bond exactly when it is the set of all edges between
//! the two sides of a partition of one component's vertex set in which each
//! side induces a connected subgraph. Recognition and enumeration both work
//! from that characterization.

use crate::error::{Error, Result};
use crate::graph::{component_containing, components, Edge, GraphView};
use crate::limits::Limits;
use serde::{Deserialize, Serialize};

/// A bond with its witnessing partition.
///
/// `side1` holds the smallest vertex of the component; both sides ascending.
/// For multigraphs `edges` repeats parallel copies.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bond {
    pub edges: Vec<Edge>,
    pub side1: Vec<usize>,
    pub side2: Vec<usize>,
}

impl Bond {
    /// Number of edges, counting multiplicity.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// True when `a` and `b` lie on different sides.
    pub fn separates(&self, a: usize, b: usize) -> bool {
        let in1 = |v: usize| self.side1.binary_search(&v).is_ok();
        let in2 = |v: usize| self.side2.binary_search(&v).is_ok();
        (in1(a) && in2(b)) || (in2(a) && in1(b))
    }
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu((0..n).collect())
    }
    fn find(&mut self, mut v: usize) -> usize {
        while self.0[v] != v {
            self.0[v] = self.0[self.0[v]];
            v = self.0[v];
        }
        v
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Checks that every edge of `f` (with multiplicity) is present in `g`.
fn check_subset<G: GraphView + ?Sized>(g: &G, f: &[Edge]) -> Result<Vec<Edge>> {
    let mut f: Vec<Edge> = f.iter().map(|e| Edge::new(e.0, e.1)).collect();
    f.sort_unstable();
    let all = g.edge_list();
    let mut i = 0;
    while i < f.len() {
        let e = f[i];
        let run = f[i..].iter().take_while(|&&d| d == e).count();
        let lo = all.partition_point(|d| *d < e);
        let hi = all.partition_point(|d| *d <= e);
        if hi - lo < run {
            return Err(Error::EdgeNotInGraph(e));
        }
        i += run;
    }
    Ok(f)
}

/// Recognizes bonds. Returns the witnessing partition when `f` is a bond.
pub fn is_bond<G: GraphView + ?Sized>(g: &G, f: &[Edge]) -> Result<Option<Bond>> {
    let f = check_subset(g, f)?;
    if f.is_empty() {
        return Ok(None);
    }
    let comp = component_containing(g, f[0].0);
    if f.iter().any(|e| comp.binary_search(&e.0).is_err()) {
        return Ok(None);
    }
    // Components of comp - F; parallel copies outside F still connect.
    let mut dsu = Dsu::new(g.vertex_count());
    let mut j = 0;
    for &e in g.edge_list() {
        while j < f.len() && f[j] < e {
            j += 1;
        }
        if j < f.len() && f[j] == e {
            j += 1;
            continue;
        }
        dsu.union(e.0, e.1);
    }
    let r1 = dsu.find(comp[0]);
    let mut side1 = Vec::new();
    let mut side2 = Vec::new();
    let mut r2 = None;
    for &v in &comp {
        let r = dsu.find(v);
        if r == r1 {
            side1.push(v);
        } else if r2.is_none() || r2 == Some(r) {
            r2 = Some(r);
            side2.push(v);
        } else {
            return Ok(None);
        }
    }
    if side2.is_empty() {
        return Ok(None);
    }
    if f.iter().any(|e| dsu.find(e.0) == dsu.find(e.1)) {
        return Ok(None);
    }
    Ok(Some(Bond {
        edges: f,
        side1,
        side2,
    }))
}

/// True iff `f` is a bond whose sides separate `x` and `y`.
pub fn is_xy_bond<G: GraphView + ?Sized>(g: &G, f: &[Edge], x: usize, y: usize) -> Result<bool> {
    Ok(match is_bond(g, f)? {
        Some(b) => x != y && b.separates(x, y),
        None => false,
    })
}

fn mask_connected(mask: u64, adj: &[u64]) -> bool {
    if mask == 0 {
        return false;
    }
    let mut reach = mask & mask.wrapping_neg();
    loop {
        let mut next = reach;
        let mut bits = reach;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= adj[i] & mask;
        }
        if next == reach {
            return reach == mask;
        }
        reach = next;
    }
}

struct ComponentScan {
    vertices: Vec<usize>,
    adj: Vec<u64>,
    /// Local edges with multiplicity.
    edges: Vec<(usize, usize)>,
}

/// Iterator over every bond of a graph, each exactly once.
///
/// Components are scanned in order of smallest vertex; within a component,
/// candidate sides are subsets containing the smallest vertex, in increasing
/// bitmask order.
pub struct BondIter {
    comps: Vec<ComponentScan>,
    comp: usize,
    mask: u64,
}

impl Iterator for BondIter {
    type Item = Bond;

    fn next(&mut self) -> Option<Bond> {
        while self.comp < self.comps.len() {
            let c = &self.comps[self.comp];
            let k = c.vertices.len();
            let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
            // side1 = {bit 0} ∪ (mask << 1); stop before side2 becomes empty
            let limit = if k == 0 { 0 } else { 1u64 << (k - 1) };
            while self.mask + 1 < limit {
                let s1 = 1 | (self.mask << 1);
                self.mask += 1;
                let s2 = full & !s1;
                if mask_connected(s1, &c.adj) && mask_connected(s2, &c.adj) {
                    let mut edges: Vec<Edge> = c
                        .edges
                        .iter()
                        .filter(|&&(a, b)| (s1 >> a & 1) != (s1 >> b & 1))
                        .map(|&(a, b)| Edge::new(c.vertices[a], c.vertices[b]))
                        .collect();
                    edges.sort_unstable();
                    let pick = |s: u64| {
                        (0..k)
                            .filter(|&i| s >> i & 1 == 1)
                            .map(|i| c.vertices[i])
                            .collect::<Vec<_>>()
                    };
                    return Some(Bond {
                        edges,
                        side1: pick(s1),
                        side2: pick(s2),
                    });
                }
            }
            self.comp += 1;
            self.mask = 0;
        }
        None
    }
}

/// All bonds, with the default component-size limit.
pub fn all_bonds<G: GraphView + ?Sized>(g: &G) -> Result<BondIter> {
    all_bonds_within(g, Limits::default().bond_component)
}

/// All bonds; fails when some component has more than `limit` vertices.
pub fn all_bonds_within<G: GraphView + ?Sized>(g: &G, limit: usize) -> Result<BondIter> {
    let limit = limit.min(63);
    let mut comps = Vec::new();
    for vertices in components(g) {
        if vertices.len() > limit {
            return Err(Error::SizeLimitExceeded {
                what: "bond enumeration (component size)",
                size: vertices.len(),
                limit,
            });
        }
        let mut local = vec![usize::MAX; g.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut adj = vec![0u64; vertices.len()];
        let mut edges = Vec::new();
        for e in g.edge_list() {
            let (a, b) = (local[e.0], local[e.1]);
            if a != usize::MAX {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
                edges.push((a, b));
            }
        }
        comps.push(ComponentScan {
            vertices,
            adj,
            edges,
        });
    }
    Ok(BondIter {
        comps,
        comp: 0,
        mask: 0,
    })
}

/// Largest bond size with the first maximum bond in enumeration order.
pub fn cocircumference<G: GraphView + ?Sized>(g: &G) -> Result<(usize, Bond)> {
    cocircumference_within(g, Limits::default().bond_component)
}

pub fn cocircumference_within<G: GraphView + ?Sized>(g: &G, limit: usize) -> Result<(usize, Bond)> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let mut best: Option<Bond> = None;
    for b in all_bonds_within(g, limit)? {
        if best.as_ref().map_or(true, |c| b.len() > c.len()) {
            best = Some(b);
        }
    }
    let best = best.ok_or_else(|| Error::InternalInvariantBroken("graph with edges has no bond".into()))?;
    Ok((best.len(), best))
}
