//! Graph families: the outerplanar family `G_k`, its dual, complete ternary
//! trees and a few standard graphs.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, MultiGraph};
use crate::limits::Limits;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A graph with a distinguished edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedEdgeGraph {
    pub graph: Graph,
    pub root_edge: Edge,
}

/// The multigraph `G_k*`: a complete ternary tree of height `k - 1` rooted
/// at `root`, plus `apex` joined to `root` once and to every leaf three
/// times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GkDual {
    pub graph: MultiGraph,
    pub apex: usize,
    pub root: usize,
    /// `{apex, root}`, dual to the root edge of `G_k`.
    pub root_edge: Edge,
}

fn check_k(k: usize, limit: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::BadParams("k must be at least 1".into()));
    }
    if k > limit {
        return Err(Error::SizeLimitExceeded {
            what: "family index k",
            size: k,
            limit,
        });
    }
    Ok(())
}

/// `G_k` with the default limit on `k`.
pub fn gen_gk(k: usize) -> Result<RootedEdgeGraph> {
    gen_gk_within(k, Limits::default().family_k)
}

/// `G_1` is the cycle `0-1-2-3-0` with root edge `{0,1}`. `G_k` is the same
/// cycle with a copy of `G_{k-1}` glued along its root edge onto each of
/// `{1,2}`, `{2,3}` and `{0,3}`; the copy's root edge `(0, 1)` maps to the
/// target edge's endpoints in ascending order. The root edge stays `{0,1}`.
pub fn gen_gk_within(k: usize, limit: usize) -> Result<RootedEdgeGraph> {
    check_k(k, limit)?;
    let mut n = 4;
    let c4 = [(0, 1), (1, 2), (2, 3), (0, 3)];
    let mut edges: Vec<(usize, usize)> = c4.to_vec();
    for _ in 1..k {
        let prev = edges.clone();
        let prev_n = n;
        n = 4;
        edges = c4.to_vec();
        for &(a, b) in &c4[1..] {
            let offset = n - 2;
            let map = |v: usize| match v {
                0 => a,
                1 => b,
                _ => v + offset,
            };
            edges.extend(prev.iter().filter(|&&e| e != (0, 1)).map(|&(u, v)| (map(u), map(v))));
            n += prev_n - 2;
        }
    }
    Ok(RootedEdgeGraph {
        graph: Graph::new(n, edges)?,
        root_edge: Edge(0, 1),
    })
}

/// `G_k*` with the default limit on `k`.
pub fn gen_gk_dual(k: usize) -> Result<GkDual> {
    gen_gk_dual_within(k, Limits::default().family_k)
}

/// Built from the tree description directly. Tree vertices are numbered in
/// breadth-first order from the root `0`; the apex is the last vertex.
pub fn gen_gk_dual_within(k: usize, limit: usize) -> Result<GkDual> {
    check_k(k, limit)?;
    let (t, tree_edges) = ternary_edges(k - 1);
    let apex = t;
    let first_leaf = (t - 1) / 3;
    let mut edges = vec![(0, apex)];
    edges.extend(tree_edges);
    for leaf in first_leaf..t {
        edges.extend([(leaf, apex); 3]);
    }
    Ok(GkDual {
        graph: MultiGraph::new(t + 1, edges)?,
        apex,
        root: 0,
        root_edge: Edge::new(0, apex),
    })
}

/// Vertex count and edges of the complete ternary tree of height `h`; the
/// children of `i` are `3i + 1 ..= 3i + 3`.
fn ternary_edges(h: usize) -> (usize, Vec<(usize, usize)>) {
    let n = (3usize.pow(h as u32 + 1) - 1) / 2;
    (n, (1..n).map(|c| ((c - 1) / 3, c)).collect())
}

/// Complete ternary tree of height `h`, with the default limit.
pub fn gen_ternary_tree(h: usize) -> Result<Graph> {
    gen_ternary_tree_within(h, Limits::default().ternary_height)
}

pub fn gen_ternary_tree_within(h: usize, limit: usize) -> Result<Graph> {
    if h > limit {
        return Err(Error::SizeLimitExceeded {
            what: "ternary tree height",
            size: h,
            limit,
        });
    }
    let (n, edges) = ternary_edges(h);
    Graph::new(n, edges)
}

fn need(ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::BadParams(msg.into()))
    }
}

pub fn cycle(n: usize) -> Result<Graph> {
    need(n >= 3, "cycle needs n >= 3")?;
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    need(n >= 1, "complete graph needs n >= 1")?;
    Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
}

pub fn path(n: usize) -> Result<Graph> {
    need(n >= 1, "path needs n >= 1")?;
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// `K_{1,leaves}` with centre `0`.
pub fn star(leaves: usize) -> Result<Graph> {
    Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

/// Internally disjoint paths between `0` and `1` with the given edge
/// lengths. At least two paths, at most one of length 1.
pub fn theta(lengths: &[usize]) -> Result<Graph> {
    need(lengths.len() >= 2, "theta needs at least two paths")?;
    need(lengths.iter().all(|&l| l >= 1), "path lengths must be positive")?;
    need(
        lengths.iter().filter(|&&l| l == 1).count() <= 1,
        "at most one path may be a single edge",
    )?;
    let mut n = 2;
    let mut edges = Vec::new();
    for &l in lengths {
        let mut prev = 0;
        for _ in 1..l {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        edges.push((prev, 1));
    }
    Graph::new(n, edges)
}

/// A random simple 3-regular graph from the pairing model, rejecting
/// pairings with loops or parallel edges.
pub fn random_cubic(n: usize, seed: u64) -> Result<Graph> {
    need(n >= 4 && n % 2 == 0, "cubic graphs need an even n >= 4")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    for _ in 0..100_000 {
        points.shuffle(&mut rng);
        let mut edges: Vec<Edge> = Vec::with_capacity(3 * n / 2);
        let mut simple = true;
        for pair in points.chunks(2) {
            if pair[0] == pair[1] {
                simple = false;
                break;
            }
            edges.push(Edge::new(pair[0], pair[1]));
        }
        if !simple {
            continue;
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        return Graph::new(n, edges.into_iter().map(|e| (e.0, e.1)));
    }
    Err(Error::InternalInvariantBroken("pairing model kept producing multigraphs".into()))
}

/// Builds a standard graph by name: `cycle`, `complete`, `path` and `star`
/// take one size parameter, `theta` takes the path lengths, `random_cubic`
/// takes `n` and uses `seed`.
pub fn gen_standard(name: &str, params: &[usize], seed: u64) -> Result<Graph> {
    let one = || match params {
        [p] => Ok(*p),
        _ => Err(Error::BadParams(format!("{name} takes exactly one parameter"))),
    };
    match name {
        "cycle" => cycle(one()?),
        "complete" => complete(one()?),
        "path" => path(one()?),
        "star" => star(one()?),
        "theta" => theta(params),
        "random_cubic" | "cubic" => random_cubic(one()?, seed),
        _ => Err(Error::BadParams(format!("unknown graph family {name:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_two_connected;

    #[test]
    fn gk_counts() {
        let expect = [(4, 4), (10, 13), (28, 40), (82, 121)];
        for (k, &(v, e)) in (1..=4).zip(&expect) {
            let g = gen_gk(k).unwrap();
            assert_eq!((g.graph.n(), g.graph.m()), (v, e), "k = {k}");
            assert!(is_two_connected(&g.graph));
            assert!(g.graph.contains_edge(g.root_edge));
        }
    }

    #[test]
    fn g2_shape() {
        let g = gen_gk(2).unwrap().graph;
        // the copy on {1,2} contributes the path 1-5-4-2
        for (a, b) in [(1, 5), (4, 5), (2, 4)] {
            assert!(g.has_edge(a, b));
        }
        assert_eq!((g.degree(0), g.degree(2)), (3, 4));
    }

    #[test]
    fn dual_counts() {
        let expect = [(2, 4), (5, 13), (14, 40), (41, 121)];
        for (k, &(v, e)) in (1..=4).zip(&expect) {
            let d = gen_gk_dual(k).unwrap();
            assert_eq!((d.graph.n(), d.graph.m()), (v, e), "k = {k}");
            assert_eq!(d.apex, v - 1);
            assert_eq!(d.graph.multiplicity(d.root_edge), if k == 1 { 4 } else { 1 });
        }
    }

    #[test]
    fn ternary_trees() {
        assert_eq!(gen_ternary_tree(0).unwrap().n(), 1);
        assert_eq!(gen_ternary_tree(1).unwrap().n(), 4);
        let t = gen_ternary_tree(2).unwrap();
        assert_eq!((t.n(), t.m()), (13, 12));
        assert_eq!(t.degree(0), 3);
        assert!(gen_ternary_tree(9).is_err());
    }

    #[test]
    fn limits_and_params() {
        assert!(matches!(gen_gk(9), Err(Error::SizeLimitExceeded { .. })));
        assert!(matches!(gen_gk(0), Err(Error::BadParams(_))));
        assert!(matches!(gen_standard("cycle", &[2], 0), Err(Error::BadParams(_))));
        assert!(matches!(gen_standard("wheel", &[5], 0), Err(Error::BadParams(_))));
        assert!(matches!(random_cubic(5, 0), Err(Error::BadParams(_))));
    }

    #[test]
    fn standard_graphs() {
        assert_eq!(gen_standard("cycle", &[4], 0).unwrap().m(), 4);
        assert_eq!(gen_standard("complete", &[4], 0).unwrap().m(), 6);
        let th = theta(&[2, 3]).unwrap();
        assert_eq!((th.n(), th.m()), (5, 5));
        assert!(is_two_connected(&th));
        let c = random_cubic(10, 1).unwrap();
        assert_eq!(c.m(), 15);
        assert!((0..10).all(|v| c.degree(v) == 3));
        assert_eq!(c, random_cubic(10, 1).unwrap());
    }
}
