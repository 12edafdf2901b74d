use super::{is_connected, Graph};

/// Block decomposition of a graph.
///
/// Blocks are maximal connected subgraphs without a cutvertex: maximal
/// 2-connected pieces, bridges, and isolated vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockTree {
    /// Vertex sets, each ascending; ordered by smallest vertex, then lexicographically.
    pub blocks: Vec<Vec<usize>>,
    /// Ascending.
    pub cutvertices: Vec<usize>,
    /// For each block, the cutvertices it contains.
    pub incidence: Vec<Vec<usize>>,
}

impl BlockTree {
    /// Index of every block containing `v`.
    pub fn blocks_of(&self, v: usize) -> Vec<usize> {
        self.blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.binary_search(&v).is_ok())
            .map(|(i, _)| i)
            .collect()
    }
}

/// Hopcroft-Tarjan biconnected components with an explicit edge stack.
pub fn blocks_and_cutvertices(g: &Graph) -> BlockTree {
    let n = g.n();
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();

    for s in 0..n {
        if disc[s] != UNSEEN {
            continue;
        }
        disc[s] = time;
        low[s] = time;
        time += 1;
        if g.degree(s) == 0 {
            blocks.push(vec![s]);
            continue;
        }
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(s, UNSEEN, 0usize)];
        while let Some(frame) = stack.last_mut() {
            let (v, p) = (frame.0, frame.1);
            let nbrs = g.neighbors(v);
            if frame.2 < nbrs.len() {
                let w = nbrs[frame.2];
                frame.2 += 1;
                if disc[w] == UNSEEN {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != p && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.push(a);
                            block.push(b);
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block.dedup();
                        blocks.push(block);
                    }
                }
            }
        }
    }

    blocks.sort();
    let mut count = vec![0usize; n];
    for b in &blocks {
        for &v in b {
            count[v] += 1;
        }
    }
    let cutvertices: Vec<usize> = (0..n).filter(|&v| count[v] >= 2).collect();
    let incidence = blocks
        .iter()
        .map(|b| {
            b.iter()
                .copied()
                .filter(|&v| count[v] >= 2)
                .collect::<Vec<_>>()
        })
        .collect();
    BlockTree {
        blocks,
        cutvertices,
        incidence,
    }
}

pub fn has_cutvertex(g: &Graph) -> bool {
    !blocks_and_cutvertices(g).cutvertices.is_empty()
}

/// Connected, at least three vertices, and no cutvertex.
pub fn is_two_connected(g: &Graph) -> bool {
    g.n() >= 3 && is_connected(g) && !has_cutvertex(g)
}
