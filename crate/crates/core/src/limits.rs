/// Size limits for the exponential routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest component scanned by bond enumeration.
    pub bond_component: usize,
    pub treewidth: usize,
    pub pathwidth: usize,
    pub rooted_pathwidth: usize,
    pub circumference: usize,
    /// Largest `k` for the `G_k` family and its dual.
    pub family_k: usize,
    /// Largest ternary tree height.
    pub ternary_height: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            bond_component: 20,
            treewidth: 15,
            pathwidth: 20,
            rooted_pathwidth: 18,
            circumference: 30,
            family_k: 8,
            ternary_height: 8,
        }
    }
}

impl Limits {
    /// Replaces every oracle vertex limit with `n`. Bitmask routines stay
    /// capped at 63 vertices regardless.
    pub fn with_vertex_limit(self, n: usize) -> Limits {
        Limits {
            bond_component: n,
            treewidth: n,
            pathwidth: n,
            rooted_pathwidth: n,
            circumference: n,
            ..self
        }
    }
}
