//! Corpus-wide checks of the width bounds, and independent re-validation of
//! emitted certificates.

use crate::bonds::{cocircumference_within, is_bond, Bond};
use crate::construct::pathwidth::bond_certified_pd;
use crate::construct::treewidth::dfs_tree_decomposition;
use crate::corpus::{connected_corpus, random_connected, random_connected_corpus, two_connected_corpus};
use crate::decomp::{validate_path_decomposition, validate_tree_decomposition};
use crate::error::{Error, Result};
use crate::formats::{BoundKind, Certificate, CertificateType};
use crate::generators::{cycle, complete, gen_gk, gen_gk_dual, gen_ternary_tree};
use crate::graph::{Graph, GraphView, MultiGraph};
use crate::limits::Limits;
use crate::oracles::{
    circumference_within, exact_pathwidth_within, exact_rooted_pathwidth_within, exact_treewidth_within,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::time::{Duration, Instant};

/// Settings for the corpus checks.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Exhaustive corpora cover every graph up to this order.
    pub max_n: usize,
    pub random_count: usize,
    pub random_max_n: usize,
    pub rooted_samples: usize,
    pub rooted_max_n: usize,
    pub seed: u64,
    pub limits: Limits,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 7,
            random_count: 200,
            random_max_n: 10,
            rooted_samples: 100,
            rooted_max_n: 9,
            seed: 20_240_601,
            limits: Limits {
                circumference: 48,
                ..Limits::default()
            },
        }
    }
}

/// Outcome of one criterion.
#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: usize,
    pub name: &'static str,
    /// Number of individual checks made.
    pub checked: usize,
    pub violations: usize,
    /// The first few violations, described.
    pub examples: Vec<String>,
    /// Oracle values worth printing.
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl CriterionReport {
    fn new(id: usize, name: &'static str) -> Self {
        CriterionReport {
            id,
            name,
            checked: 0,
            violations: 0,
            examples: Vec::new(),
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0 && self.checked > 0
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.examples.len() < 10 {
                self.examples.push(what());
            }
        }
    }

    fn fail(&mut self, what: String) {
        self.check(false, || what);
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] criterion {:>2}: {} ({} checks, {} violations, {:.1}s)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.checked,
            self.violations,
            self.elapsed.as_secs_f64()
        )?;
        for n in &self.notes {
            write!(f, "\n       {n}")?;
        }
        for e in &self.examples {
            write!(f, "\n       violation: {e}")?;
        }
        Ok(())
    }
}

fn timed(id: usize, name: &'static str, body: impl FnOnce(&mut CriterionReport)) -> CriterionReport {
    let start = Instant::now();
    let mut r = CriterionReport::new(id, name);
    body(&mut r);
    r.elapsed = start.elapsed();
    r
}

fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|e| format!("{}-{}", e.0, e.1)).collect();
    format!("n={} [{}]", g.n(), edges.join(" "))
}

/// Exhaustive connected graphs plus the seeded random sample.
pub fn tree_corpus(cfg: &VerifyConfig) -> Vec<Graph> {
    let mut gs = connected_corpus(cfg.max_n);
    gs.extend(random_connected_corpus(cfg.random_count, cfg.random_max_n, cfg.seed));
    gs
}

/// DFS tree decompositions validate and have width at most the
/// cocircumference.
pub fn criterion_1(cfg: &VerifyConfig) -> CriterionReport {
    timed(1, "tree decomposition width <= cocircumference", |r| {
        for g in tree_corpus(cfg) {
            let outcome = dfs_tree_decomposition(&g).and_then(|c| {
                let cc = cocircumference_within(&g, cfg.limits.bond_component)?.0;
                Ok((validate_tree_decomposition(&g, &c.decomposition), c.width(), cc))
            });
            match outcome {
                Ok((valid, w, cc)) => r.check(valid.is_ok() && w <= cc, || {
                    format!("{}: validity {valid:?}, width {w}, cc {cc}", describe(&g))
                }),
                Err(e) => r.fail(format!("{}: {e}", describe(&g))),
            }
        }
    })
}

/// Every per-bag certificate is a bond paying for its bag.
pub fn criterion_2(cfg: &VerifyConfig) -> CriterionReport {
    timed(2, "per-bag certificates are bonds with |X_u| - 1 <= |F_u|", |r| {
        for g in tree_corpus(cfg) {
            let c = match dfs_tree_decomposition(&g) {
                Ok(c) => c,
                Err(e) => {
                    r.fail(format!("{}: {e}", describe(&g)));
                    continue;
                }
            };
            for u in 0..g.n() {
                if u == c.root() {
                    continue;
                }
                let bag = c.decomposition.bags[u].len();
                match &c.certificates[u] {
                    Some(f) => {
                        let bond = matches!(is_bond(&g, &f.edges), Ok(Some(_)));
                        r.check(bond && bag - 1 <= f.len(), || {
                            format!("{} node {u}: bond {bond}, bag {bag}, |F| {}", describe(&g), f.len())
                        });
                    }
                    None => r.fail(format!("{} node {u}: missing certificate", describe(&g))),
                }
            }
        }
    })
}

/// Edge-level path decompositions on 2-connected graphs.
pub fn criterion_3(cfg: &VerifyConfig) -> CriterionReport {
    timed(3, "path decomposition width <= 3|F| - 2 through every edge", |r| {
        for g in two_connected_corpus(cfg.max_n) {
            for &e in g.edges() {
                let c = match bond_certified_pd(&g, e.0, e.1) {
                    Ok(c) => c,
                    Err(err) => {
                        r.fail(format!("{} edge {e}: {err}", describe(&g)));
                        continue;
                    }
                };
                let f = c.bond.len();
                let bond = matches!(is_bond(&g, &c.bond.edges), Ok(Some(_))) && c.bond.contains_edge(e);
                let valid = validate_path_decomposition(&g, &c.pd, None, None).is_ok();
                let gy = g.without_vertex(e.1);
                let local = c.rooted.pd.pd.map_vertices(|v| gy.local(v).unwrap_or(usize::MAX));
                let rooted_valid = validate_path_decomposition(&gy.graph, &local, gy.local(e.0), None).is_ok();
                let w = c.width();
                let rw = c.rooted.width();
                r.check(
                    bond && valid && rooted_valid && w + 2 <= 3 * f && rw + 3 <= 3 * f && c.rooted.strict,
                    || {
                        format!(
                            "{} edge {e}: bond {bond}, valid {valid}/{rooted_valid}, |F| {f}, width {w}, rooted width {rw}",
                            describe(&g)
                        )
                    },
                );
            }
        }
    })
}

/// `pw(G) <= 3 cc(G) - 2` by oracles alone.
pub fn criterion_4(cfg: &VerifyConfig) -> CriterionReport {
    timed(4, "exact pathwidth <= 3 cc - 2 on 2-connected graphs", |r| {
        for g in two_connected_corpus(cfg.max_n) {
            let vals = exact_pathwidth_within(&g, cfg.limits.pathwidth)
                .and_then(|pw| Ok((pw, cocircumference_within(&g, cfg.limits.bond_component)?.0)));
            match vals {
                Ok((pw, cc)) => r.check(pw + 2 <= 3 * cc, || format!("{}: pw {pw}, cc {cc}", describe(&g))),
                Err(e) => r.fail(format!("{}: {e}", describe(&g))),
            }
        }
    })
}

/// Oracle values for the family at `k = 1, 2`.
pub fn criterion_5(cfg: &VerifyConfig) -> CriterionReport {
    timed(5, "G_1, G_2: cc <= 2k and pw >= k", |r| {
        for k in 1..=2 {
            let vals = gen_gk(k).and_then(|g| {
                let cc = cocircumference_within(&g.graph, cfg.limits.bond_component)?.0;
                let pw = exact_pathwidth_within(&g.graph, cfg.limits.pathwidth)?;
                Ok((cc, pw))
            });
            match vals {
                Ok((cc, pw)) => {
                    r.notes.push(format!("k = {k}: cc = {cc}, pw = {pw}"));
                    r.check(cc <= 2 * k, || format!("k = {k}: cc {cc} > {}", 2 * k));
                    r.check(pw >= k, || format!("k = {k}: pw {pw} < {k}"));
                }
                Err(e) => r.fail(format!("k = {k}: {e}")),
            }
        }
    })
}

/// Pathwidth of the dual, with and without its root edge.
pub fn criterion_6(cfg: &VerifyConfig) -> CriterionReport {
    timed(6, "pw(G_k*) >= k and pw(G_k* - e_k*) >= k for k <= 3", |r| {
        for k in 1..=3 {
            let vals = gen_gk_dual(k).and_then(|d| {
                let cut = d.graph.without_edge_copy(d.root_edge)?;
                let pw = exact_pathwidth_within(&d.graph, cfg.limits.pathwidth)?;
                let pw_cut = exact_pathwidth_within(&cut, cfg.limits.pathwidth)?;
                Ok((pw, pw_cut))
            });
            match vals {
                Ok((pw, pw_cut)) => {
                    r.notes.push(format!("k = {k}: pw(G*) = {pw}, pw(G* - e*) = {pw_cut}"));
                    r.check(pw >= k, || format!("k = {k}: pw(G*) {pw} < {k}"));
                    r.check(pw_cut >= k, || format!("k = {k}: pw(G* - e*) {pw_cut} < {k}"));
                }
                Err(e) => r.fail(format!("k = {k}: {e}")),
            }
        }
    })
}

/// Cocircumference of `G_k` against circumference of the dual.
pub fn criterion_7(cfg: &VerifyConfig) -> CriterionReport {
    timed(7, "cc(G_k) = circ(G_k*) for k <= 2, circ(G_k*) <= 2k for k <= 4", |r| {
        for k in 1..=4 {
            let vals = gen_gk_dual(k).and_then(|d| circumference_within(&d.graph, cfg.limits.circumference));
            match vals {
                Ok(circ) => {
                    r.notes.push(format!("k = {k}: circ(G*) = {circ}"));
                    r.check(circ <= 2 * k, || format!("k = {k}: circ {circ} > {}", 2 * k));
                    if k <= 2 {
                        match gen_gk(k).and_then(|g| cocircumference_within(&g.graph, cfg.limits.bond_component)) {
                            Ok((cc, _)) => r.check(cc == circ, || format!("k = {k}: cc {cc} != circ {circ}")),
                            Err(e) => r.fail(format!("k = {k}: {e}")),
                        }
                    }
                }
                Err(e) => r.fail(format!("k = {k}: {e}")),
            }
        }
    })
}

/// Pathwidth of complete ternary trees.
pub fn criterion_8(cfg: &VerifyConfig) -> CriterionReport {
    timed(8, "pw(ternary tree of height h) = h for h <= 2", |r| {
        for h in 0..=2 {
            match gen_ternary_tree(h).and_then(|t| exact_pathwidth_within(&t, cfg.limits.pathwidth)) {
                Ok(pw) => r.check(pw == h, || format!("h = {h}: pw {pw}")),
                Err(e) => r.fail(format!("h = {h}: {e}")),
            }
        }
    })
}

/// Random `(G, x, y)` with `G` connected on `3..=max_n` vertices and `x != y`.
pub fn rooted_samples(cfg: &VerifyConfig) -> Vec<(Graph, usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x9e37_79b9);
    (0..cfg.rooted_samples)
        .map(|_| {
            let n = rng.gen_range(3..=cfg.rooted_max_n.max(3));
            let p = rng.gen_range(0.1..=0.6);
            let g = random_connected(n, p, &mut rng);
            let x = rng.gen_range(0..n);
            let y = (x + rng.gen_range(1..n)) % n;
            (g, x, y)
        })
        .collect()
}

/// The two observations on rooted pathwidth.
pub fn criterion_9(cfg: &VerifyConfig) -> CriterionReport {
    timed(9, "pw(G;x,y) <= pw(G;x) + 1 and <= pw(G-y;x) + 1", |r| {
        let lim = cfg.limits.rooted_pathwidth;
        for (g, x, y) in rooted_samples(cfg) {
            let gy = g.without_vertex(y);
            let lx = gy.local(x).expect("x != y");
            let vals = (|| {
                Ok::<_, Error>((
                    exact_rooted_pathwidth_within(&g, x, Some(y), lim)?,
                    exact_rooted_pathwidth_within(&g, x, None, lim)?,
                    exact_rooted_pathwidth_within(&gy.graph, lx, None, lim)?,
                ))
            })();
            match vals {
                Ok((xy, x_only, minus_y)) => {
                    r.check(xy <= x_only + 1, || {
                        format!("{} x={x} y={y}: pw(G;x,y) {xy}, pw(G;x) {x_only}", describe(&g))
                    });
                    r.check(xy <= minus_y + 1, || {
                        format!("{} x={x} y={y}: pw(G;x,y) {xy}, pw(G-y;x) {minus_y}", describe(&g))
                    });
                }
                Err(e) => r.fail(format!("{} x={x} y={y}: {e}", describe(&g))),
            }
        }
    })
}

/// Treewidth never exceeds pathwidth; anchors on complete graphs and cycles.
pub fn criterion_10(cfg: &VerifyConfig) -> CriterionReport {
    timed(10, "tw <= pw on the corpus, tw(K_n) = n - 1, pw(C_n) = 2", |r| {
        let lim = cfg.limits;
        for g in tree_corpus(cfg) {
            let vals = exact_treewidth_within(&g, lim.treewidth)
                .and_then(|tw| Ok((tw, exact_pathwidth_within(&g, lim.pathwidth)?)));
            match vals {
                Ok((tw, pw)) => r.check(tw <= pw, || format!("{}: tw {tw} > pw {pw}", describe(&g))),
                Err(e) => r.fail(format!("{}: {e}", describe(&g))),
            }
        }
        for n in 3..=8 {
            match complete(n).and_then(|g| exact_treewidth_within(&g, lim.treewidth)) {
                Ok(tw) => r.check(tw == n - 1, || format!("tw(K_{n}) = {tw}")),
                Err(e) => r.fail(format!("K_{n}: {e}")),
            }
            match cycle(n).and_then(|g| exact_pathwidth_within(&g, lim.pathwidth)) {
                Ok(pw) => r.check(pw == 2, || format!("pw(C_{n}) = {pw}")),
                Err(e) => r.fail(format!("C_{n}: {e}")),
            }
        }
    })
}

/// All ten criteria in order.
pub fn run_all(cfg: &VerifyConfig) -> Vec<CriterionReport> {
    vec![
        criterion_1(cfg),
        criterion_2(cfg),
        criterion_3(cfg),
        criterion_4(cfg),
        criterion_5(cfg),
        criterion_6(cfg),
        criterion_7(cfg),
        criterion_8(cfg),
        criterion_9(cfg),
        criterion_10(cfg),
    ]
}

fn same_sides(b: &Bond, side1: &[usize], side2: &[usize]) -> bool {
    let mut s1 = side1.to_vec();
    let mut s2 = side2.to_vec();
    s1.sort_unstable();
    s2.sort_unstable();
    (b.side1 == s1 && b.side2 == s2) || (b.side1 == s2 && b.side2 == s1)
}

/// Re-checks a certificate against `g` from scratch. Returns the problems
/// found; an empty list means the certificate holds.
///
/// A tree certificate's bound must not exceed the cocircumference, computed
/// when `g` is within `limits`; otherwise it must not exceed the largest
/// listed bond.
pub fn validate_certificate(g: &Graph, cert: &Certificate, limits: &Limits) -> Result<Vec<String>> {
    let mut problems = Vec::new();
    let bonds: Vec<Option<Bond>> = cert
        .bonds
        .iter()
        .map(|b| match is_bond(g, &b.edge_list()) {
            Ok(Some(w)) if same_sides(&w, &b.side1, &b.side2) => Ok(Some(w)),
            Ok(_) => Ok(None),
            Err(Error::EdgeNotInGraph(_)) => Ok(None),
            Err(e) => Err(e),
        })
        .collect::<Result<_>>()?;
    for (i, b) in bonds.iter().enumerate() {
        if b.is_none() {
            problems.push(format!("bond {i} is not a bond of the graph with the listed sides"));
        }
    }
    let width = cert.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1);
    if width != cert.width {
        problems.push(format!("stated width {} but the bags give {width}", cert.width));
    }
    if width > cert.bound.value {
        problems.push(format!("width {width} exceeds the bound {}", cert.bound.value));
    }
    match cert.kind {
        CertificateType::TreeDecomposition => {
            match cert.tree_decomposition() {
                Ok(d) => {
                    if let Err(v) = validate_tree_decomposition(g, &d) {
                        problems.push(format!("invalid tree decomposition: {v}"));
                    }
                }
                Err(e) => problems.push(e.to_string()),
            }
            if cert.bound.kind != BoundKind::Cocircumference {
                problems.push("tree certificates carry a cc bound".into());
            }
            let paid: Vec<usize> = cert.bags.iter().map(Vec::len).filter(|&s| s >= 2).collect();
            if paid.len() != cert.bonds.len() {
                problems.push(format!("{} bags of size >= 2 but {} bonds", paid.len(), cert.bonds.len()));
            } else {
                for (i, (&s, b)) in paid.iter().zip(&cert.bonds).enumerate() {
                    if s - 1 > b.edges.len() {
                        problems.push(format!("bag {i} with {s} vertices outgrows its bond of {}", b.edges.len()));
                    }
                }
            }
            let largest = cert.bonds.iter().map(|b| b.edges.len()).max().unwrap_or(0);
            let ceiling = if g.m() > 0 && g.n() <= limits.bond_component {
                cocircumference_within(g, limits.bond_component)?.0
            } else {
                largest
            };
            if cert.bound.value > ceiling {
                problems.push(format!("bound {} exceeds the cocircumference {ceiling}", cert.bound.value));
            }
        }
        CertificateType::PathDecomposition => {
            if let Err(v) = validate_path_decomposition(g, &cert.path_decomposition(), None, None) {
                problems.push(format!("invalid path decomposition: {v}"));
            }
            if cert.tree_edges.is_some() {
                problems.push("path certificates have no tree edges".into());
            }
            if cert.bonds.len() != 1 {
                problems.push(format!("expected one bond, found {}", cert.bonds.len()));
            } else {
                let f = cert.bonds[0].edges.len();
                let expect = match cert.bound.kind {
                    BoundKind::ThreeFMinusTwo => (3 * f).checked_sub(2),
                    BoundKind::ThreeFMinusThree => (3 * f).checked_sub(3),
                    BoundKind::Cocircumference => None,
                };
                if expect != Some(cert.bound.value) {
                    problems.push(format!("bound {:?} = {} does not match |F| = {f}", cert.bound.kind, cert.bound.value));
                }
            }
        }
    }
    Ok(problems)
}

/// Oracle summary for one graph, skipping anything outside `limits`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OracleValues {
    pub treewidth: Option<usize>,
    pub pathwidth: Option<usize>,
    pub cocircumference: Option<usize>,
    pub circumference: Option<usize>,
}

pub fn oracle_values(g: &MultiGraph, limits: &Limits) -> OracleValues {
    let simple = g.simplify();
    OracleValues {
        treewidth: exact_treewidth_within(&simple, limits.treewidth).ok(),
        pathwidth: exact_pathwidth_within(g, limits.pathwidth).ok(),
        cocircumference: if g.edge_count() > 0 {
            cocircumference_within(g, limits.bond_component).ok().map(|c| c.0)
        } else {
            None
        },
        circumference: circumference_within(g, limits.circumference).ok(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::treewidth::composed_tree_decomposition;

    fn small() -> VerifyConfig {
        VerifyConfig {
            max_n: 5,
            random_count: 10,
            random_max_n: 7,
            rooted_samples: 10,
            rooted_max_n: 6,
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn small_configuration_passes() {
        for r in run_all(&small()) {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn certificates_round_trip() {
        let g = complete(4).unwrap();
        let t = composed_tree_decomposition(&g).unwrap();
        let cert = Certificate::from_tree(&t, 4);
        assert_eq!(validate_certificate(&g, &cert, &Limits::default()).unwrap(), Vec::<String>::new());
        let p = bond_certified_pd(&g, 0, 1).unwrap();
        let cert = Certificate::from_path(&p);
        assert_eq!(validate_certificate(&g, &cert, &Limits::default()).unwrap(), Vec::<String>::new());
    }

    #[test]
    fn tampered_certificates_fail() {
        let g = complete(4).unwrap();
        let t = composed_tree_decomposition(&g).unwrap();
        let mut cert = Certificate::from_tree(&t, 4);
        cert.bound.value = 5;
        assert!(!validate_certificate(&g, &cert, &Limits::default()).unwrap().is_empty());
        let mut cert = Certificate::from_tree(&t, 4);
        cert.bags[1].pop();
        assert!(!validate_certificate(&g, &cert, &Limits::default()).unwrap().is_empty());
        let p = bond_certified_pd(&g, 0, 1).unwrap();
        let mut cert = Certificate::from_path(&p);
        cert.bonds[0].edges.pop();
        assert!(!validate_certificate(&g, &cert, &Limits::default()).unwrap().is_empty());
    }
}
