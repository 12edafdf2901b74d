//! Definition-literal oracles, slow and independent of the library.
#![allow(dead_code)]

use cobond::{Edge, GraphView};

pub fn edges_of<G: GraphView + ?Sized>(g: &G) -> Vec<(usize, usize)> {
    g.edge_list().iter().map(|e| (e.0, e.1)).collect()
}

fn count_components(n: usize, edges: &[(usize, usize)], skip: impl Fn(usize) -> bool) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], v: usize) -> usize {
        if p[v] != v {
            let r = find(p, p[v]);
            p[v] = r;
        }
        p[v]
    }
    let mut comps = n;
    for (i, &(a, b)) in edges.iter().enumerate() {
        if skip(i) {
            continue;
        }
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            comps -= 1;
        }
    }
    comps
}

/// Every inclusion-minimal disconnecting edge set, by index into
/// `edges`. Exponential in the edge count.
pub fn naive_bonds(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let m = edges.len();
    assert!(m <= 20);
    let base = count_components(n, edges, |_| false);
    let mut out = Vec::new();
    for mask in 1u32..1 << m {
        let cut = |mask: u32| count_components(n, edges, |i| mask >> i & 1 == 1) > base;
        if !cut(mask) {
            continue;
        }
        let minimal = (0..m).filter(|&i| mask >> i & 1 == 1).all(|i| !cut(mask & !(1 << i)));
        if minimal {
            out.push((0..m).filter(|&i| mask >> i & 1 == 1).collect());
        }
    }
    out
}

pub fn naive_cocircumference(n: usize, edges: &[(usize, usize)]) -> usize {
    naive_bonds(n, edges).iter().map(Vec::len).max().unwrap_or(0)
}

/// Calls `f` on every permutation of `0..n`.
pub fn permutations(n: usize, mut f: impl FnMut(&[usize])) {
    fn rec(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(p, k + 1, f);
            p.swap(k, i);
        }
    }
    let mut p: Vec<usize> = (0..n).collect();
    rec(&mut p, 0, &mut f);
}

/// Treewidth by simulating elimination with fill-in over every ordering.
pub fn naive_treewidth(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut best = usize::MAX;
    permutations(n, |order| {
        let mut adj = vec![vec![false; n]; n];
        for &(a, b) in edges {
            adj[a][b] = true;
            adj[b][a] = true;
        }
        let mut gone = vec![false; n];
        let mut width = 0;
        for &v in order {
            let ns: Vec<usize> = (0..n).filter(|&w| !gone[w] && adj[v][w]).collect();
            width = width.max(ns.len());
            for &a in &ns {
                for &b in &ns {
                    if a != b {
                        adj[a][b] = true;
                    }
                }
            }
            gone[v] = true;
        }
        best = best.min(width);
    });
    if n == 0 {
        0
    } else {
        best
    }
}

/// Pathwidth straight from the definition: every assignment of an interval
/// of `0..n` to each vertex, keeping those where adjacent vertices'
/// intervals meet. `first`/`last` force a vertex into the first/last
/// non-empty bag. Only for `n <= 6`.
pub fn interval_pathwidth(n: usize, edges: &[(usize, usize)], first: Option<usize>, last: Option<usize>) -> usize {
    assert!(n <= 6);
    if n == 0 {
        return 0;
    }
    struct Search<'a> {
        n: usize,
        edges: &'a [(usize, usize)],
        first: Option<usize>,
        last: Option<usize>,
        iv: Vec<(usize, usize)>,
        load: Vec<usize>,
        best: usize,
    }
    impl Search<'_> {
        fn go(&mut self, v: usize) {
            if v == self.n {
                let lo = self.iv.iter().map(|i| i.0).min().unwrap();
                let hi = self.iv.iter().map(|i| i.1).max().unwrap();
                let ends = self.first.map_or(true, |x| self.iv[x].0 == lo)
                    && self.last.map_or(true, |y| self.iv[y].1 == hi);
                if ends {
                    self.best = self.best.min(self.load.iter().max().unwrap() - 1);
                }
                return;
            }
            for a in 0..self.n {
                for b in a..self.n {
                    let meets = self.edges.iter().all(|&(p, q)| {
                        let other = if p == v { q } else if q == v { p } else { return true };
                        other > v || (self.iv[other].0 <= b && a <= self.iv[other].1)
                    });
                    if !meets || (a..=b).any(|p| self.load[p] >= self.best) {
                        continue;
                    }
                    self.iv[v] = (a, b);
                    for p in a..=b {
                        self.load[p] += 1;
                    }
                    self.go(v + 1);
                    for p in a..=b {
                        self.load[p] -= 1;
                    }
                }
            }
        }
    }
    let mut s = Search {
        n,
        edges,
        first,
        last,
        iv: vec![(0, 0); n],
        load: vec![0; n],
        best: n,
    };
    s.go(0);
    s.best
}

/// Pathwidth as the minimum over all orderings of the vertex separation.
pub fn ordering_pathwidth(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut best = usize::MAX;
    permutations(n, |order| {
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut last = pos.clone();
        for &(a, b) in edges {
            last[a] = last[a].max(pos[b]);
            last[b] = last[b].max(pos[a]);
        }
        let vs = (0..n)
            .map(|i| (0..n).filter(|&v| pos[v] <= i && last[v] > i).count())
            .max()
            .unwrap_or(0);
        best = best.min(vs);
    });
    if n == 0 {
        0
    } else {
        best
    }
}

/// Longest cycle by trying every ordered vertex sequence. Parallel edges
/// give a 2-cycle.
pub fn naive_circumference(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut adj = vec![vec![0usize; n]; n];
    for &(a, b) in edges {
        adj[a][b] += 1;
        adj[b][a] += 1;
    }
    let mut best = if edges.iter().any(|&(a, b)| adj[a][b] >= 2) { 2 } else { 0 };
    fn extend(adj: &[Vec<usize>], path: &mut Vec<usize>, used: &mut [bool], best: &mut usize) {
        let v = *path.last().unwrap();
        if path.len() >= 3 && adj[v][path[0]] > 0 {
            *best = (*best).max(path.len());
        }
        for w in 0..adj.len() {
            if !used[w] && adj[v][w] > 0 {
                used[w] = true;
                path.push(w);
                extend(adj, path, used, best);
                path.pop();
                used[w] = false;
            }
        }
    }
    for s in 0..n {
        let mut used = vec![false; n];
        used[s] = true;
        extend(&adj, &mut vec![s], &mut used, &mut best);
    }
    best
}

pub fn edge(a: usize, b: usize) -> Edge {
    Edge::new(a, b)
}
