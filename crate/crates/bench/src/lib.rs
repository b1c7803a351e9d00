//! Fixtures for the criterion benches.

use indigraph_core::{make_named_group, GroupContext};

/// Groups the kernels are timed on, small to large.
pub const GROUPS: &[&str] = &[
    "symmetric(4)",
    "direct(cyclic(2),cyclic(12))",
    "elementary_abelian(2,4)",
    "direct(dihedral(4),symmetric(3))",
    "direct(cyclic(2),symmetric(4))",
];

/// A fresh context, so nothing is cached between iterations.
pub fn context(recipe: &str) -> GroupContext {
    GroupContext::new(recipe, make_named_group(recipe).expect("bench recipe"))
}
