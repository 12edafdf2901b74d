//! Bond-certified tree and path decompositions.
//!
//! Every connected graph gets a tree decomposition, built on a depth-first
//! search tree, whose width is at most the size of its largest bond (the
//! cocircumference); each bag carries the bond that pays for it. Every edge
//! `xy` of a 2-connected graph lies in a bond `F` for which a path
//! decomposition of width at most `3|F| - 2` is produced, together with `F`.
//!
//! Brute-force oracles (exact treewidth, exact and rooted pathwidth,
//! circumference, bond enumeration) check every certificate at small sizes,
//! and [`generators`] builds the extremal outerplanar family `G_k` and its
//! dual.

pub mod bonds;
pub mod construct;
pub mod corpus;
pub mod decomp;
pub mod error;
pub mod formats;
pub mod generators;
pub mod graph;
pub mod limits;
pub mod oracles;
pub mod verify;

pub use bonds::{all_bonds, cocircumference, is_bond, is_xy_bond, Bond};
pub use construct::pathwidth::{bond_certified_pd, bond_certified_rooted_pd, BondCertifiedPD, RootedPD};
pub use construct::treewidth::{dfs_tree_decomposition, CertifiedTreeDecomposition};
pub use decomp::{PathDecomposition, TreeDecomposition, Violation};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, GraphView, MultiGraph};
pub use limits::Limits;
