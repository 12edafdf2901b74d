//! Test corpora: every graph on a few vertices up to isomorphism, and
//! seeded random connected graphs.

use crate::graph::{is_connected, is_two_connected, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

/// Largest order [`all_graphs`] accepts; `2^(n choose 2)` must fit a `u64`
/// code and the labelling search stay small.
pub const MAX_CORPUS_N: usize = 8;

fn adjacency(g: &Graph) -> Vec<u32> {
    let mut adj = vec![0u32; g.n()];
    for e in g.edges() {
        adj[e.0] |= 1 << e.1;
        adj[e.1] |= 1 << e.0;
    }
    adj
}

/// Stable colour refinement, starting from degrees. Colours are ranks of
/// signatures, so relabelling the graph relabels the colouring.
fn refine(adj: &[u32]) -> Vec<usize> {
    let n = adj.len();
    let mut colour: Vec<usize> = adj.iter().map(|a| a.count_ones() as usize).collect();
    let mut classes = colour.iter().collect::<BTreeSet<_>>().len();
    loop {
        let sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut ns: Vec<usize> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| colour[w]).collect();
                ns.sort_unstable();
                (colour[v], ns)
            })
            .collect();
        let ranks: Vec<&(usize, Vec<usize>)> = sig.iter().collect::<BTreeSet<_>>().into_iter().collect();
        colour = sig.iter().map(|s| ranks.binary_search(&s).unwrap()).collect();
        if ranks.len() == classes {
            return colour;
        }
        classes = ranks.len();
    }
}

/// Upper-triangle bit code of `adj` under the labelling `pos` (vertex to
/// new position).
fn code(adj: &[u32], pos: &[usize]) -> u64 {
    let n = adj.len();
    let mut c = 0u64;
    for v in 0..n {
        for w in v + 1..n {
            if adj[v] >> w & 1 == 1 {
                let (a, b) = if pos[v] < pos[w] { (pos[v], pos[w]) } else { (pos[w], pos[v]) };
                c |= 1 << (b * (b - 1) / 2 + a);
            }
        }
    }
    c
}

/// Smallest code over all labellings that list the refinement cells in
/// colour order.
pub fn canonical_code(g: &Graph) -> u64 {
    let adj = adjacency(g);
    let colour = refine(&adj);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for v in 0..g.n() {
        if colour[v] >= cells.len() {
            cells.resize(colour[v] + 1, Vec::new());
        }
        cells[colour[v]].push(v);
    }
    let mut pos = vec![0; g.n()];
    let mut best = u64::MAX;
    labellings(&adj, &mut cells, 0, 0, &mut pos, &mut best);
    best
}

fn labellings(adj: &[u32], cells: &mut [Vec<usize>], cell: usize, next: usize, pos: &mut [usize], best: &mut u64) {
    if cell == cells.len() {
        *best = (*best).min(code(adj, pos));
        return;
    }
    let k = cells[cell].len();
    // Heap's algorithm over the cell, assigning positions next..next+k.
    let mut c = vec![0usize; k];
    let assign = |cells: &mut [Vec<usize>], pos: &mut [usize], best: &mut u64| {
        for (i, &v) in cells[cell].iter().enumerate() {
            pos[v] = next + i;
        }
        labellings(adj, cells, cell + 1, next + k, pos, best);
    };
    assign(cells, pos, best);
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                cells[cell].swap(0, i);
            } else {
                cells[cell].swap(c[i], i);
            }
            assign(cells, pos, best);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// One representative of every isomorphism class of graphs on `n`
/// vertices, `n <= MAX_CORPUS_N`.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_CORPUS_N, "corpus limited to {MAX_CORPUS_N} vertices");
    let mut level = vec![Graph::empty(n.min(1))];
    for k in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..1 << (k - 1) {
                let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.0, e.1)).collect();
                edges.extend((0..k - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, k - 1)));
                let h = Graph::new(k, edges).expect("extension is simple");
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

/// Connected graphs on `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(is_connected).collect()
}

/// 2-connected graphs on `n` vertices up to isomorphism.
pub fn two_connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(is_two_connected).collect()
}

/// Connected graphs with at least one edge and at most `max_n` vertices.
pub fn connected_corpus(max_n: usize) -> Vec<Graph> {
    (2..=max_n).flat_map(connected_graphs).collect()
}

/// 2-connected graphs with at most `max_n` vertices.
pub fn two_connected_corpus(max_n: usize) -> Vec<Graph> {
    (3..=max_n).flat_map(two_connected_graphs).collect()
}

/// A connected graph on `n` vertices: a random spanning tree plus each
/// other pair independently with probability `p`.
pub fn random_connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = BTreeSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (a, b) = (order[i].min(order[j]), order[i].max(order[j]));
        edges.insert((a, b));
    }
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.insert((a, b));
            }
        }
    }
    Graph::new(n, edges).expect("generated graph is simple")
}

/// `count` seeded random connected graphs with `2 <= n <= max_n` and edge
/// probability drawn from `[0.1, 0.6]`.
pub fn random_connected_corpus(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_n);
            let p = rng.gen_range(0.1..=0.6);
            random_connected(n, p, &mut rng)
        })
        .collect()
}
