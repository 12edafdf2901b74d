//! Exact width and cycle oracles for small graphs.
//!
//! These share no code with the constructions they check. Treewidth is an
//! elimination-ordering subset DP, pathwidth the vertex separation number
//! computed over vertex subsets, circumference a pruned backtracking search.

use crate::error::{Error, Result};
use crate::graph::GraphView;
use crate::limits::Limits;

fn check_size(what: &'static str, size: usize, limit: usize) -> Result<()> {
    let limit = limit.min(63);
    if size > limit {
        return Err(Error::SizeLimitExceeded { what, size, limit });
    }
    Ok(())
}

fn check_vertex<G: GraphView + ?Sized>(g: &G, v: usize) -> Result<()> {
    if v >= g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.vertex_count(),
        });
    }
    Ok(())
}

fn neighbor_masks<G: GraphView + ?Sized>(g: &G) -> Vec<u64> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// Treewidth, with the default limit.
pub fn exact_treewidth<G: GraphView + ?Sized>(g: &G) -> Result<usize> {
    exact_treewidth_within(g, Limits::default().treewidth)
}

/// Treewidth via `TW(S) = min_{v in S} max(TW(S - v), |Q(S - v, v)|)`, where
/// `Q(S, v)` is the set of vertices outside `S ∪ {v}` reachable from `v`
/// through `S`.
pub fn exact_treewidth_within<G: GraphView + ?Sized>(g: &G, limit: usize) -> Result<usize> {
    let n = g.vertex_count();
    check_size("exact treewidth", n, limit)?;
    if n == 0 {
        return Ok(0);
    }
    let adj = neighbor_masks(g);
    let full: u64 = if n == 64 { !0 } else { (1 << n) - 1 };
    let q = |s: u64, v: usize| -> u32 {
        let mut seen = 1u64 << v;
        let mut frontier = 1u64 << v;
        let mut out = 0u64;
        while frontier != 0 {
            let mut next = 0u64;
            for u in bits(frontier) {
                next |= adj[u];
            }
            next &= !seen;
            seen |= next;
            out |= next & !s;
            frontier = next & s;
        }
        out.count_ones()
    };
    let mut tw = vec![u8::MAX; 1 << n];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = u8::MAX;
        for v in bits(s) {
            let rest = s & !(1 << v);
            let c = tw[rest as usize].max(q(rest, v) as u8);
            best = best.min(c);
        }
        tw[s as usize] = best;
    }
    Ok(tw[full as usize] as usize)
}

/// Pathwidth, with the default limit.
pub fn exact_pathwidth<G: GraphView + ?Sized>(g: &G) -> Result<usize> {
    exact_pathwidth_within(g, Limits::default().pathwidth)
}

/// Pathwidth as the vertex separation number. Parallel edges are ignored.
pub fn exact_pathwidth_within<G: GraphView + ?Sized>(g: &G, limit: usize) -> Result<usize> {
    check_size("exact pathwidth", g.vertex_count(), limit)?;
    Ok(separation_dp(g, None, None))
}

/// `pw(G; x)`, or `pw(G; x, y)` when `y` is given, with the default limit.
pub fn exact_rooted_pathwidth<G: GraphView + ?Sized>(g: &G, x: usize, y: Option<usize>) -> Result<usize> {
    exact_rooted_pathwidth_within(g, x, y, Limits::default().rooted_pathwidth)
}

/// Minimum width of a path decomposition with `x` in the first bag and, when
/// given, `y` in the last bag.
///
/// Layouts start with `x`. A placed `y` counts as active until the layout
/// is complete, which keeps it alive through to the last bag.
pub fn exact_rooted_pathwidth_within<G: GraphView + ?Sized>(
    g: &G,
    x: usize,
    y: Option<usize>,
    limit: usize,
) -> Result<usize> {
    check_size("exact rooted pathwidth", g.vertex_count(), limit)?;
    check_vertex(g, x)?;
    if let Some(y) = y {
        check_vertex(g, y)?;
    }
    Ok(separation_dp(g, Some(x), y))
}

/// `f(S)`: the best cost of laying out `S` first, where a layout costs the
/// largest active set over its prefixes.
fn separation_dp<G: GraphView + ?Sized>(g: &G, first: Option<usize>, pinned: Option<usize>) -> usize {
    let n = g.vertex_count();
    if n <= 1 {
        return 0;
    }
    let adj = neighbor_masks(g);
    let full: u64 = (1 << n) - 1;
    let pin = pinned.map_or(0u64, |y| 1 << y);
    let cost = |s: u64| -> u8 {
        if s == full {
            return 0;
        }
        let mut active = s & pin;
        for v in bits(s) {
            if adj[v] & !s != 0 {
                active |= 1 << v;
            }
        }
        active.count_ones() as u8
    };
    let mut f = vec![u8::MAX; 1 << n];
    f[0] = 0;
    for s in 1..=full {
        let mut best = u8::MAX;
        for v in bits(s) {
            let rest = s & !(1 << v);
            if let Some(x) = first {
                // x must come first: it is the last vertex removed.
                if (rest == 0) != (v == x) {
                    continue;
                }
            }
            best = best.min(f[rest as usize]);
        }
        if best != u8::MAX {
            best = best.max(cost(s));
        }
        f[s as usize] = best;
    }
    f[full as usize] as usize
}

/// Circumference, with the default limit.
pub fn circumference<G: GraphView + ?Sized>(g: &G) -> Result<usize> {
    circumference_within(g, Limits::default().circumference)
}

/// Length of a longest cycle. A pair of parallel edges is a cycle of length 2.
pub fn circumference_within<G: GraphView + ?Sized>(g: &G, limit: usize) -> Result<usize> {
    let n = g.vertex_count();
    check_size("circumference", n, limit)?;
    let adj = neighbor_masks(g);
    let parallel = g.edge_list().windows(2).any(|w| w[0] == w[1]);
    let mut best = if parallel { 2 } else { 0 };
    for s in 0..n {
        if n - s <= best {
            break;
        }
        let allowed: u64 = !((1u64 << (s + 1)) - 1) & if n == 64 { !0 } else { (1 << n) - 1 };
        let mut search = CycleSearch {
            adj: &adj,
            start: s,
            allowed,
            best,
        };
        search.extend(s, 1 << s, 1);
        best = search.best;
    }
    if best == 0 {
        return Err(Error::NoCycle);
    }
    Ok(best)
}

struct CycleSearch<'a> {
    adj: &'a [u64],
    start: usize,
    /// Vertices the path may still use: those above `start`.
    allowed: u64,
    best: usize,
}

impl CycleSearch<'_> {
    /// Vertices reachable from `v` through unused allowed vertices.
    fn reach(&self, v: usize, used: u64) -> u64 {
        let free = self.allowed & !used;
        let mut seen = 0u64;
        let mut frontier = self.adj[v] & free;
        while frontier != 0 {
            seen |= frontier;
            let mut next = 0u64;
            for u in bits(frontier) {
                next |= self.adj[u];
            }
            frontier = next & free & !seen;
        }
        seen
    }

    fn extend(&mut self, v: usize, used: u64, len: usize) {
        if len >= 3 && self.adj[v] & (1 << self.start) != 0 && len > self.best {
            self.best = len;
        }
        let reach = self.reach(v, used);
        if len + reach.count_ones() as usize <= self.best {
            return;
        }
        for w in bits(self.adj[v] & self.allowed & !used) {
            self.extend(w, used | 1 << w, len + 1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Graph, MultiGraph};

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn treewidth_small() {
        assert_eq!(exact_treewidth(&path(5)).unwrap(), 1);
        assert_eq!(exact_treewidth(&Graph::empty(3)).unwrap(), 0);
        for n in 3..8 {
            assert_eq!(exact_treewidth(&cycle(n)).unwrap(), 2);
        }
        assert_eq!(exact_treewidth(&complete(4)).unwrap(), 3);
        assert_eq!(exact_treewidth(&complete(6)).unwrap(), 5);
    }

    #[test]
    fn pathwidth_small() {
        assert_eq!(exact_pathwidth(&cycle(4)).unwrap(), 2);
        assert_eq!(exact_pathwidth(&complete(4)).unwrap(), 3);
        assert_eq!(exact_pathwidth(&path(6)).unwrap(), 1);
        assert_eq!(exact_pathwidth(&Graph::empty(1)).unwrap(), 0);
        // ternary tree of height 2
        let mut e = vec![(0, 1), (0, 2), (0, 3)];
        for c in 1..4 {
            for j in 0..3 {
                e.push((c, 4 + 3 * (c - 1) + j));
            }
        }
        assert_eq!(exact_pathwidth(&Graph::new(13, e).unwrap()).unwrap(), 2);
    }

    #[test]
    fn rooted_pathwidth_small() {
        let k2 = path(2);
        assert_eq!(exact_rooted_pathwidth(&k2, 0, None).unwrap(), 1);
        assert_eq!(exact_rooted_pathwidth(&k2, 0, Some(1)).unwrap(), 1);
        assert_eq!(exact_rooted_pathwidth(&path(3), 0, None).unwrap(), 1);
        assert_eq!(exact_rooted_pathwidth(&cycle(4), 0, None).unwrap(), 2);
        // star with centre 0: forcing two leaves to the ends costs nothing
        // extra, forcing the centre into both ends does.
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(exact_rooted_pathwidth(&star, 1, Some(2)).unwrap(), 1);
        assert_eq!(exact_rooted_pathwidth(&path(5), 2, None).unwrap(), 2);
        assert_eq!(exact_rooted_pathwidth(&path(5), 0, Some(4)).unwrap(), 1);
        assert_eq!(exact_rooted_pathwidth(&path(5), 0, Some(1)).unwrap(), 2);
    }

    #[test]
    fn circumference_small() {
        for n in 3..9 {
            assert_eq!(circumference(&cycle(n)).unwrap(), n);
        }
        assert_eq!(circumference(&complete(6)).unwrap(), 6);
        assert_eq!(circumference(&path(4)).unwrap_err(), Error::NoCycle);
        let m = MultiGraph::new(2, [(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(circumference(&m).unwrap(), 2);
        // two triangles sharing vertex 0
        let bowtie = Graph::new(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(circumference(&bowtie).unwrap(), 3);
    }

    #[test]
    fn limits_are_enforced() {
        assert!(matches!(
            exact_treewidth(&path(16)),
            Err(Error::SizeLimitExceeded { size: 16, limit: 15, .. })
        ));
        assert!(matches!(exact_rooted_pathwidth_within(&path(5), 0, None, 4), Err(Error::SizeLimitExceeded { .. })));
        assert_eq!(
            exact_rooted_pathwidth(&path(3), 7, None).unwrap_err(),
            Error::VertexOutOfRange { vertex: 7, n: 3 }
        );
    }
}
