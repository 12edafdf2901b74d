use super::{Edge, Graph};

/// An edge bipartition `(G1, G2)` of a graph with its shared vertex set.
///
/// Vertices incident to no edge belong to the left side only, so they never
/// appear in `cut`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    pub left_edges: Vec<Edge>,
    pub right_edges: Vec<Edge>,
    /// `V(G1) ∩ V(G2)`, ascending.
    pub cut: Vec<usize>,
}

impl Separation {
    /// Builds a separation of `g` from its left edge set.
    pub fn from_left(g: &Graph, left: Vec<Edge>) -> Separation {
        let mut left = left;
        left.sort_unstable();
        let right: Vec<Edge> = g
            .edges()
            .iter()
            .copied()
            .filter(|e| left.binary_search(e).is_err())
            .collect();
        let mut in_left = vec![false; g.n()];
        let mut in_right = vec![false; g.n()];
        for e in &left {
            in_left[e.0] = true;
            in_left[e.1] = true;
        }
        for e in &right {
            in_right[e.0] = true;
            in_right[e.1] = true;
        }
        let cut = (0..g.n()).filter(|&v| in_left[v] && in_right[v]).collect();
        Separation {
            left_edges: left,
            right_edges: right,
            cut,
        }
    }

    pub fn is_nontrivial(&self) -> bool {
        !self.left_edges.is_empty() && !self.right_edges.is_empty()
    }

    pub fn order(&self) -> usize {
        self.cut.len()
    }
}

/// A piece of `g` relative to `{x, y}`: the edge `xy`, or a component of
/// `g - {x, y}` together with its incident edges.
struct Piece {
    edges: Vec<Edge>,
    touches_x: bool,
    touches_y: bool,
}

/// Finds a nontrivial separation of the connected graph `g` whose cut is
/// exactly `{x, y}`, or `None` when there is none.
///
/// The edge `xy` is split off on its own when that works; otherwise the left
/// side is the first component of `g - {x, y}` (by smallest vertex) that
/// attaches to both `x` and `y` and leaves a remainder that also does.
/// When `g + xy` has no cutvertex this reduces to: `xy ∈ E` and `|E| ≥ 2`,
/// or `g - {x, y}` has at least two components.
pub fn split_separation(g: &Graph, x: usize, y: usize) -> Option<Separation> {
    if x == y || x >= g.n() || y >= g.n() {
        return None;
    }
    let mut pieces: Vec<Piece> = Vec::new();
    let mut comp_of = vec![usize::MAX; g.n()];
    for s in 0..g.n() {
        if s == x || s == y || comp_of[s] != usize::MAX {
            continue;
        }
        let id = pieces.len();
        let mut queue = vec![s];
        comp_of[s] = id;
        let mut i = 0;
        while i < queue.len() {
            let v = queue[i];
            i += 1;
            for &w in g.neighbors(v) {
                if w != x && w != y && comp_of[w] == usize::MAX {
                    comp_of[w] = id;
                    queue.push(w);
                }
            }
        }
        pieces.push(Piece {
            edges: Vec::new(),
            touches_x: false,
            touches_y: false,
        });
    }
    for &e in g.edges() {
        let owner = if comp_of[e.0] != usize::MAX && e.0 != x && e.0 != y {
            comp_of[e.0]
        } else if comp_of[e.1] != usize::MAX && e.1 != x && e.1 != y {
            comp_of[e.1]
        } else {
            continue; // the edge xy
        };
        let p = &mut pieces[owner];
        p.edges.push(e);
        p.touches_x |= e.contains(x);
        p.touches_y |= e.contains(y);
    }
    let has_xy = g.has_edge(x, y);

    // Whether the pieces other than `skip` (plus xy unless it is the one
    // skipped) are non-empty and attach to both x and y.
    let rest_covers = |skip: Option<usize>, keep_xy: bool| {
        let (mut any, mut tx, mut ty) = (keep_xy, keep_xy, keep_xy);
        for (i, p) in pieces.iter().enumerate() {
            if Some(i) != skip && !p.edges.is_empty() {
                any = true;
                tx |= p.touches_x;
                ty |= p.touches_y;
            }
        }
        any && tx && ty
    };

    if has_xy && rest_covers(None, false) {
        return Some(Separation::from_left(g, vec![Edge::new(x, y)]));
    }
    for (i, p) in pieces.iter().enumerate() {
        if p.touches_x && p.touches_y && rest_covers(Some(i), has_xy) {
            return Some(Separation::from_left(g, p.edges.clone()));
        }
    }
    None
}
