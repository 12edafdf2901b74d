//! Path decompositions certified by a bond through a chosen edge.
//!
//! [`bond_certified_rooted_pd`] works on a connected graph `G` and distinct
//! vertices `x`, `y` such that `G + xy` has no cutvertex. It returns an
//! `x`-`y` bond `F` and a path decomposition of `G - y` with `x` in the first
//! bag and width at most `3|F| - 2` (at most `3|F| - 3` when `G` itself has
//! no cutvertex). The recursion is on the number of edges:
//!
//! 1. A single edge `xy`: `F = {xy}` and the decomposition is `({x})`.
//! 2. A nontrivial separation with cut `{x, y}`: solve both sides, take the
//!    union of their bonds, and chain the two decompositions at `x`.
//! 3. Otherwise `x` lies in a single block `B` of `G - y`. Every piece of
//!    `G` outside `B ∪ {y}` hangs off one attachment vertex `x_i` of `B` and
//!    off `y`. Solve each attachment graph `H_i`, then either chain `B` with
//!    `H_1` (one attachment) or stack all `H_i` onto `B` (several).
//!
//! Every level re-checks its own result (bond, decomposition, width bound)
//! and reports it to an optional observer.

pub use super::compose::RootedPD;
use super::compose::{concat_one_to_one, stack_one_to_many, StackPart};
use crate::bonds::{is_bond, Bond};
use crate::decomp::{validate_path_decomposition, PathDecomposition};
use crate::error::{Error, Result};
use crate::graph::{
    blocks_and_cutvertices, component_containing, has_cutvertex, is_connected,
    is_two_connected, split_separation, Edge, Graph, Subgraph,
};
use serde::{Deserialize, Serialize};

/// An `x`-`y` bond with a rooted path decomposition of `G - y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BondCertifiedPD {
    pub bond: Bond,
    /// Decomposition of `G - y` (original ids, `y` absent) rooted at `x`.
    pub pd: RootedPD,
    /// `G` has no cutvertex, so `width <= 3|F| - 3`.
    pub strict: bool,
}

impl BondCertifiedPD {
    pub fn width(&self) -> usize {
        self.pd.width()
    }

    /// The width bound this certificate guarantees.
    pub fn bound(&self) -> usize {
        if self.strict {
            3 * self.bond.len() - 3
        } else {
            3 * self.bond.len() - 2
        }
    }
}

/// Which branch of the recursion produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    SingleEdge,
    Separation,
    OneAttachment,
    ManyAttachments,
}

/// What one recursive call produced, reported after it succeeds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CallRecord {
    pub depth: usize,
    pub edges: usize,
    pub parent_edges: Option<usize>,
    pub step: Step,
    pub bond_size: usize,
    pub width: usize,
    pub strict: bool,
}

/// Result of the edge-level construction on a 2-connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeBondCertificate {
    pub edge: Edge,
    /// A bond containing `edge`.
    pub bond: Bond,
    /// Decomposition of the whole graph.
    pub pd: PathDecomposition,
    /// The rooted certificate for `G - y` the decomposition was built from.
    pub rooted: BondCertifiedPD,
}

impl EdgeBondCertificate {
    pub fn width(&self) -> usize {
        self.pd.width().unwrap_or(0)
    }

    /// `3|F| - 2`.
    pub fn bound(&self) -> usize {
        3 * self.bond.len() - 2
    }
}

/// Edges-and-decomposition result of one level, in that level's ids.
struct Partial {
    bond: Vec<Edge>,
    pd: RootedPD,
}

impl Partial {
    fn lift(self, sub: &Subgraph) -> Partial {
        let mut bond: Vec<Edge> = self.bond.iter().map(|&e| sub.lift_edge(e)).collect();
        bond.sort_unstable();
        Partial {
            bond,
            pd: self.pd.map_vertices(|v| sub.lift(v)),
        }
    }
}

fn broken(msg: impl Into<String>) -> Error {
    Error::InternalInvariantBroken(msg.into())
}

struct Solver<'a> {
    observer: &'a mut dyn FnMut(&CallRecord),
}

impl Solver<'_> {
    fn check_preconditions(&self, g: &Graph, x: usize, y: usize, depth: usize) -> Result<()> {
        let fail = |msg: String| {
            if depth == 0 {
                Err(Error::PreconditionViolation(msg))
            } else {
                Err(broken(format!("recursive call at depth {depth}: {msg}")))
            }
        };
        if x >= g.n() || y >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: x.max(y),
                n: g.n(),
            });
        }
        if x == y {
            return fail("x and y coincide".into());
        }
        if g.m() == 0 {
            return if depth == 0 {
                Err(Error::NoEdges)
            } else {
                fail("no edges".into())
            };
        }
        if !is_connected(g) {
            return if depth == 0 {
                Err(Error::DisconnectedInput)
            } else {
                fail("disconnected".into())
            };
        }
        if has_cutvertex(&g.with_edge(Edge::new(x, y))?) {
            return fail(format!("G + {x}{y} has a cutvertex"));
        }
        Ok(())
    }

    fn solve_sub(&mut self, sub: &Subgraph, x: usize, y: usize, depth: usize, parent_edges: usize) -> Result<Partial> {
        let lx = sub.local(x).ok_or_else(|| broken(format!("{x} missing from subgraph")))?;
        let ly = sub.local(y).ok_or_else(|| broken(format!("{y} missing from subgraph")))?;
        let r = self.solve(&sub.graph, lx, ly, depth, Some(parent_edges))?;
        Ok(r.lift(sub))
    }

    fn solve(&mut self, g: &Graph, x: usize, y: usize, depth: usize, parent_edges: Option<usize>) -> Result<Partial> {
        self.check_preconditions(g, x, y, depth)?;
        if let Some(pm) = parent_edges {
            if g.m() >= pm {
                return Err(broken(format!("edge count did not drop: {} >= {pm}", g.m())));
            }
        }

        let (step, out) = if g.m() == 1 {
            (
                Step::SingleEdge,
                Partial {
                    bond: vec![Edge::new(x, y)],
                    pd: RootedPD::singleton(x),
                },
            )
        } else if let Some(sep) = split_separation(g, x, y) {
            (Step::Separation, self.separation_case(g, x, y, sep.left_edges, sep.right_edges, depth)?)
        } else {
            self.block_case(g, x, y, depth)?
        };

        // Re-check this level's claim in full.
        let bond = is_bond(g, &out.bond)?
            .filter(|b| b.separates(x, y))
            .ok_or_else(|| broken(format!("{step:?} at depth {depth}: result is not an x-y bond")))?;
        let gy = g.without_vertex(y);
        let local_pd = out.pd.pd.map_vertices(|v| gy.local(v).unwrap_or(usize::MAX));
        if let Err(v) = validate_path_decomposition(&gy.graph, &local_pd, gy.local(x), None) {
            return Err(broken(format!("{step:?} at depth {depth}: invalid decomposition of G - y: {v}")));
        }
        let strict = !has_cutvertex(g);
        let width = out.pd.width();
        let f = bond.len();
        let case_bound = match step {
            Step::SingleEdge | Step::Separation | Step::ManyAttachments => 3 * f - 3,
            Step::OneAttachment => 3 * f - 2,
        };
        let bound = if strict { 3 * f - 3 } else { 3 * f - 2 };
        if width > case_bound || width > bound {
            return Err(broken(format!(
                "{step:?} at depth {depth}: width {width} exceeds bound for |F| = {f}"
            )));
        }
        (self.observer)(&CallRecord {
            depth,
            edges: g.m(),
            parent_edges,
            step,
            bond_size: f,
            width,
            strict,
        });
        Ok(out)
    }

    fn separation_case(
        &mut self,
        g: &Graph,
        x: usize,
        y: usize,
        left: Vec<Edge>,
        right: Vec<Edge>,
        depth: usize,
    ) -> Result<Partial> {
        let s1 = g.edge_subgraph(&left);
        let s2 = g.edge_subgraph(&right);
        let r1 = self.solve_sub(&s1, x, y, depth + 1, g.m())?;
        let r2 = self.solve_sub(&s2, x, y, depth + 1, g.m())?;
        let mut bond = r1.bond.clone();
        bond.extend(&r2.bond);
        bond.sort_unstable();
        bond.dedup();
        if bond.len() != r1.bond.len() + r2.bond.len() {
            return Err(broken("bonds of the two sides overlap"));
        }
        let pd = concat_one_to_one(&r1.pd.pinned_to(x), &r2.pd)?;
        Ok(Partial { bond, pd })
    }

    fn block_case(&mut self, g: &Graph, x: usize, y: usize, depth: usize) -> Result<(Step, Partial)> {
        if g.has_edge(x, y) {
            return Err(broken("xy is an edge but no separation was found"));
        }
        let gy = g.without_vertex(y);
        let lx = gy.local(x).expect("x != y");
        let bt = blocks_and_cutvertices(&gy.graph);
        let mine = bt.blocks_of(lx);
        if mine.len() != 1 {
            return Err(broken(format!("x lies in {} blocks of G - y", mine.len())));
        }
        let block: Vec<usize> = bt.blocks[mine[0]].iter().map(|&v| gy.lift(v)).collect();
        let mut in_block = vec![false; g.n()];
        for &v in &block {
            in_block[v] = true;
        }
        let attachments: Vec<usize> = block
            .iter()
            .copied()
            .filter(|&v| g.neighbors(v).iter().any(|&w| !in_block[w]))
            .collect();
        if attachments.is_empty() {
            return Err(broken("block has no attachment vertex"));
        }

        // Components of G - (V(B) ∪ {y}), grouped by their attachment.
        let mut hang: Vec<Vec<usize>> = vec![Vec::new(); attachments.len()];
        let mut seen = in_block.clone();
        seen[y] = true;
        for s in 0..g.n() {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            let mut touches: Vec<usize> = Vec::new();
            let mut touches_y = false;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in g.neighbors(v) {
                    if w == y {
                        touches_y = true;
                    } else if in_block[w] {
                        touches.push(w);
                    } else if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            touches.sort_unstable();
            touches.dedup();
            if touches.len() != 1 || !touches_y {
                return Err(broken(format!(
                    "component at {s} touches {} block vertices (y: {touches_y})",
                    touches.len()
                )));
            }
            let i = attachments.binary_search(&touches[0]).expect("touched vertex is an attachment");
            hang[i].extend(comp);
        }

        let mut results = Vec::with_capacity(attachments.len());
        let mut edge_total = 0;
        for (i, &xi) in attachments.iter().enumerate() {
            let mut vs = hang[i].clone();
            vs.push(xi);
            vs.push(y);
            let sub = g.induced(&vs);
            edge_total += sub.graph.m();
            results.push(self.solve_sub(&sub, xi, y, depth + 1, g.m())?);
        }
        let bsub = g.induced(&block);
        edge_total += bsub.graph.m();
        if edge_total != g.m() {
            return Err(broken("block and attachment graphs do not partition the edges"));
        }

        // Largest bonds first, ties by attachment id.
        let mut order: Vec<usize> = (0..attachments.len()).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(results[i].bond.len()), attachments[i]));

        if attachments.len() == 1 {
            let x1 = attachments[0];
            if x1 == x {
                return Err(broken("single attachment coincides with x"));
            }
            let r0 = self.solve_sub(&bsub, x, x1, depth + 1, g.m())?;
            let r1 = &results[0];
            let bond = if r0.bond.len() >= r1.bond.len() {
                r0.bond.clone()
            } else {
                r1.bond.clone()
            };
            let pd = concat_one_to_one(&r0.pd.pinned_to(x1), &r1.pd)?;
            return Ok((Step::OneAttachment, Partial { bond, pd }));
        }

        let x1 = attachments[order[0]];
        let x2 = attachments[order[1]];
        let lx1 = bsub.local(x1).expect("attachment in block");
        let lx2 = bsub.local(x2).expect("attachment in block");
        let r0 = self.solve(&bsub.graph, lx1, lx2, depth + 1, Some(g.m()))?;
        // Side of B - F_0 holding x.
        let cut_block = bsub.graph.without_edges(&r0.bond);
        let mut x_side: Vec<usize> = component_containing(&cut_block, bsub.local(x).expect("x in block"))
            .into_iter()
            .map(|v| bsub.lift(v))
            .collect();
        x_side.sort_unstable();
        let r0 = r0.lift(&bsub);

        let f0 = r0.bond.len();
        let f1 = results[order[0]].bond.len();
        let f2 = results[order[1]].bond.len();
        let mut with_block = r0.bond.clone();
        let mut union_all = Vec::new();
        for (i, r) in results.iter().enumerate() {
            union_all.extend(&r.bond);
            if x_side.binary_search(&attachments[i]).is_ok() {
                with_block.extend(&r.bond);
            }
        }
        with_block.sort_unstable();
        union_all.sort_unstable();
        if with_block.len() < f0 + f2 || union_all.len() < f1 + 1 {
            return Err(broken("candidate bonds smaller than counted"));
        }
        let bond = if with_block.len() >= union_all.len() {
            with_block
        } else {
            union_all
        };

        let base = RootedPD {
            pd: r0.pd.pd.with_everywhere(x2),
            root: x1,
            co_root: None,
        };
        let parts: Vec<StackPart> = order
            .iter()
            .map(|&i| StackPart {
                attach: attachments[i],
                pd: results[i].pd.clone(),
            })
            .collect();
        let pd = stack_one_to_many(&base, &parts, x)?;
        Ok((Step::ManyAttachments, Partial { bond, pd }))
    }
}

/// An `x`-`y` bond `F` of `g` with a decomposition of `g - y` rooted at `x`
/// of width at most `3|F| - 2`, or `3|F| - 3` when `g` has no cutvertex.
///
/// Requires `g` connected with an edge, `x != y`, and `g + xy` without a
/// cutvertex.
pub fn bond_certified_rooted_pd(g: &Graph, x: usize, y: usize) -> Result<BondCertifiedPD> {
    bond_certified_rooted_pd_traced(g, x, y, &mut |_| {})
}

/// As [`bond_certified_rooted_pd`], reporting every recursive call (inner
/// calls first) to `observer`.
pub fn bond_certified_rooted_pd_traced(
    g: &Graph,
    x: usize,
    y: usize,
    observer: &mut dyn FnMut(&CallRecord),
) -> Result<BondCertifiedPD> {
    let mut solver = Solver { observer };
    let out = solver.solve(g, x, y, 0, None)?;
    let bond = is_bond(g, &out.bond)?.ok_or_else(|| broken("top-level result is not a bond"))?;
    Ok(BondCertifiedPD {
        bond,
        pd: out.pd,
        strict: !has_cutvertex(g),
    })
}

/// For a 2-connected `g` and edge `xy`: a bond containing `xy` and a path
/// decomposition of `g` of width at most `3|F| - 2`.
pub fn bond_certified_pd(g: &Graph, x: usize, y: usize) -> Result<EdgeBondCertificate> {
    let edge = Edge::new(x, y);
    if !g.has_edge(x, y) {
        return Err(Error::EdgeNotInGraph(edge));
    }
    if !is_two_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    let rooted = bond_certified_rooted_pd(g, x, y)?;
    if !rooted.strict || rooted.width() > 3 * rooted.bond.len() - 3 {
        return Err(broken("rooted certificate misses the strict bound"));
    }
    let pd = rooted.pd.pd.with_everywhere(y);
    if let Err(v) = validate_path_decomposition(g, &pd, None, None) {
        return Err(broken(format!("extended decomposition invalid: {v}")));
    }
    if !rooted.bond.contains_edge(edge) {
        return Err(broken("x-y bond misses the edge xy"));
    }
    let out = EdgeBondCertificate {
        edge,
        bond: rooted.bond.clone(),
        pd,
        rooted,
    };
    if out.width() > out.bound() {
        return Err(broken("width exceeds 3|F| - 2"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let e: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        Graph::new(n, e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn single_edge() {
        let g = complete(2);
        let r = bond_certified_rooted_pd(&g, 0, 1).unwrap();
        assert_eq!(r.bond.edges, vec![Edge(0, 1)]);
        assert_eq!(r.pd.pd, PathDecomposition::from_slices(&[&[0]]));
        assert_eq!(r.width(), 0);
        assert_eq!(r.bound(), 0);
    }

    #[test]
    fn triangle() {
        let g = complete(3);
        let mut steps = Vec::new();
        let r = bond_certified_rooted_pd_traced(&g, 0, 1, &mut |c| steps.push(c.step)).unwrap();
        assert_eq!(r.bond.edges, vec![Edge(0, 1), Edge(0, 2)]);
        assert_eq!(r.width(), 1);
        assert!(r.strict);
        assert_eq!(steps.last(), Some(&Step::Separation));
        assert!(steps.contains(&Step::OneAttachment));
    }

    #[test]
    fn c4_from_an_edge() {
        let g = cycle(4);
        let r = bond_certified_rooted_pd(&g, 0, 1).unwrap();
        assert_eq!(r.bond.len(), 2);
        assert!(r.bond.separates(0, 1));
        assert!(r.width() <= 3);
        assert_eq!(r.pd.pd.vertices(), [0, 2, 3].into_iter().collect());
    }

    #[test]
    fn non_adjacent_pair_with_cutvertex() {
        // path 0-2-1: G + 01 is a triangle
        let g = Graph::new(3, [(0, 2), (2, 1)]).unwrap();
        let r = bond_certified_rooted_pd(&g, 0, 1).unwrap();
        assert!(!r.strict);
        assert!(r.width() <= 3 * r.bond.len() - 2);
    }

    #[test]
    fn rejects_bad_preconditions() {
        let g = Graph::new(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(matches!(
            bond_certified_rooted_pd(&g, 0, 2),
            Err(Error::PreconditionViolation(_))
        ));
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(bond_certified_rooted_pd(&g, 0, 1).unwrap_err(), Error::DisconnectedInput);
        assert_eq!(
            bond_certified_pd(&cycle(4), 0, 2).unwrap_err(),
            Error::EdgeNotInGraph(Edge(0, 2))
        );
        let p = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(bond_certified_pd(&p, 0, 1).unwrap_err(), Error::NotTwoConnected);
    }

    #[test]
    fn edge_certificates_on_small_graphs() {
        for g in [cycle(4), complete(4), complete(3), complete(5), cycle(7)] {
            for &e in g.edges() {
                let c = bond_certified_pd(&g, e.0, e.1).unwrap();
                assert!(c.bond.contains_edge(e));
                assert!(c.width() <= c.bound());
                assert_eq!(validate_path_decomposition(&g, &c.pd, None, None), Ok(()));
            }
        }
    }
}
