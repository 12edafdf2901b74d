//! Decompositions built together with the bonds that bound their width.

pub mod compose;
pub mod pathwidth;
pub mod treewidth;

pub use compose::RootedPD;
