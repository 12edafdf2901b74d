//! Gluing rooted path decompositions along shared vertices.

use crate::decomp::{Bag, PathDecomposition};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A path decomposition with `root` in its first bag and, when set,
/// `co_root` in its last bag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootedPD {
    pub pd: PathDecomposition,
    pub root: usize,
    pub co_root: Option<usize>,
}

impl RootedPD {
    pub fn new(pd: PathDecomposition, root: usize, co_root: Option<usize>) -> Result<RootedPD> {
        let first_ok = pd.bags.first().is_some_and(|b| b.contains(&root));
        let last_ok = co_root.map_or(true, |c| pd.bags.last().is_some_and(|b| b.contains(&c)));
        if !first_ok || !last_ok {
            return Err(Error::PreconditionViolation(format!(
                "root {root} / co-root {co_root:?} not in the end bags"
            )));
        }
        Ok(RootedPD { pd, root, co_root })
    }

    /// The one-bag decomposition `({v})` of a single vertex.
    pub fn singleton(v: usize) -> RootedPD {
        RootedPD {
            pd: PathDecomposition::new(vec![Bag::from([v])]),
            root: v,
            co_root: Some(v),
        }
    }

    pub fn width(&self) -> usize {
        self.pd.width().unwrap_or(0)
    }

    /// Adds `v` to every bag and makes it the co-root.
    pub fn pinned_to(&self, v: usize) -> RootedPD {
        RootedPD {
            pd: self.pd.with_everywhere(v),
            root: self.root,
            co_root: Some(v),
        }
    }

    pub fn map_vertices(&self, f: impl Fn(usize) -> usize) -> RootedPD {
        RootedPD {
            pd: self.pd.map_vertices(&f),
            root: f(self.root),
            co_root: self.co_root.map(&f),
        }
    }
}

/// Concatenates `first` (rooted at `x`, co-rooted at `x'`) with `second`
/// (rooted at `x'`), where the two graphs share exactly `x'`.
///
/// Bags are unchanged, so the width is the larger input width.
pub fn concat_one_to_one(first: &RootedPD, second: &RootedPD) -> Result<RootedPD> {
    let shared = first.co_root.ok_or_else(|| {
        Error::PreconditionViolation("first decomposition has no co-root".into())
    })?;
    if second.root != shared {
        return Err(Error::PreconditionViolation(format!(
            "second decomposition is rooted at {}, expected {shared}",
            second.root
        )));
    }
    let v1 = first.pd.vertices();
    let v2 = second.pd.vertices();
    let common: Vec<usize> = v1.intersection(&v2).copied().collect();
    if common != [shared] {
        return Err(Error::OverlapViolation(format!(
            "shared vertices {common:?}, expected [{shared}]"
        )));
    }
    let mut bags = first.pd.bags.clone();
    bags.extend(second.pd.bags.iter().cloned());
    Ok(RootedPD {
        pd: PathDecomposition::new(bags),
        root: first.root,
        co_root: second.co_root,
    })
}

/// One graph `G_i` hanging off the base graph at `attach`, with a path
/// decomposition rooted there.
#[derive(Debug, Clone)]
pub struct StackPart {
    pub attach: usize,
    pub pd: RootedPD,
}

/// Combines a base graph `B` with graphs `G_1, ..., G_m` (`m >= 2`) that
/// each meet `B` in one vertex `x_i` and are otherwise disjoint, giving a
/// decomposition of the union rooted at any `x ∈ V(B)`.
///
/// `base` must be rooted at `x_1`. The base bags are reversed with `x`
/// added to each, then `G_1`'s bags follow. For `i >= 2` the bags
/// `X' ∪ Y^i_j` are inserted right after `X_j(x_i) ∪ {x}`, where `j(x_i)`
/// is the first base bag holding `x_i` and `X'` is that bag with `x_i`
/// (and any earlier-inserted attachment sharing the same bag) removed and
/// `x` added. Width is at most `max(width(B) + p + 1, width(G_1))` with `p`
/// the largest width among `G_2, ..., G_m`.
pub fn stack_one_to_many(base: &RootedPD, parts: &[StackPart], x: usize) -> Result<RootedPD> {
    if parts.len() < 2 {
        return Err(Error::TooFewParts(parts.len()));
    }
    if base.root != parts[0].attach {
        return Err(Error::PreconditionViolation(format!(
            "base is rooted at {}, expected x_1 = {}",
            base.root, parts[0].attach
        )));
    }
    let base_vertices = base.pd.vertices();
    if !base_vertices.contains(&x) {
        return Err(Error::PreconditionViolation(format!("{x} is not a vertex of the base")));
    }
    let part_vertices: Vec<Bag> = parts.iter().map(|p| p.pd.pd.vertices()).collect();
    for (i, p) in parts.iter().enumerate() {
        if p.pd.root != p.attach {
            return Err(Error::PreconditionViolation(format!(
                "part {i} is rooted at {}, expected {}",
                p.pd.root, p.attach
            )));
        }
        let meet: Vec<usize> = part_vertices[i].intersection(&base_vertices).copied().collect();
        if meet != [p.attach] {
            return Err(Error::OverlapViolation(format!(
                "part {i} meets the base in {meet:?}, expected [{}]",
                p.attach
            )));
        }
        for (k, other) in part_vertices.iter().enumerate().skip(i + 1) {
            if !part_vertices[i].is_disjoint(other) {
                return Err(Error::OverlapViolation(format!("parts {i} and {k} intersect")));
            }
        }
    }

    let xb = &base.pd.bags;
    let mut inserted_at: Vec<Vec<usize>> = vec![Vec::new(); xb.len()];
    for (i, p) in parts.iter().enumerate().skip(1) {
        let j = base.pd.first_appearance(p.attach).expect("attachment lies in the base");
        inserted_at[j].push(i);
    }

    let mut bags: Vec<Bag> = Vec::new();
    for j in (0..xb.len()).rev() {
        let mut top = xb[j].clone();
        top.insert(x);
        bags.push(top);
        let mut trimmed = xb[j].clone();
        for &i in &inserted_at[j] {
            trimmed.remove(&parts[i].attach);
            let mut shell = trimmed.clone();
            shell.insert(x);
            for y in &parts[i].pd.pd.bags {
                let b: Bag = shell.union(y).copied().collect();
                if b.len() > xb[j].len() + y.len() {
                    return Err(Error::InternalInvariantBroken(format!(
                        "stacked bag of size {} exceeds {} + {}",
                        b.len(),
                        xb[j].len(),
                        y.len()
                    )));
                }
                bags.push(b);
            }
        }
    }
    bags.extend(parts[0].pd.pd.bags.iter().cloned());

    let out = RootedPD {
        pd: PathDecomposition::new(bags),
        root: x,
        co_root: None,
    };
    let p = parts[1..].iter().map(|s| s.pd.width()).max().unwrap_or(0);
    let bound = (base.width() + p + 1).max(parts[0].pd.width());
    if out.width() > bound {
        return Err(Error::InternalInvariantBroken(format!(
            "stacked width {} exceeds {bound}",
            out.width()
        )));
    }
    Ok(out)
}
