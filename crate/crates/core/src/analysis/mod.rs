//! Dimension classification, bound reports, commuting classes and the
//! flat-magnitude linear system.

mod bounds;
mod classify;
mod commuting;
mod flat;

pub use bounds::{bounds, bounds_with, counting_bound_check, mols_lower_bound, Bound, BoundOptions, BoundReport};
pub use classify::{classify, DimensionClass};
pub use commuting::{commuting_classes, verify_commuting_classes, CommutingClassSet, IntMatrix};
pub use flat::flat_magnitude_solve;

use crate::constructions::{LatticeLineSet, MubSet};

/// Every basis orthonormal and every pair unbiased, checked exactly.
pub fn is_mub_set(ms: &MubSet) -> bool {
    ms.violation().is_none()
}

/// Pairwise `|u·v| = √d` with no repeated line.
pub fn is_lattice_line_set(ls: &LatticeLineSet) -> bool {
    ls.violation().is_none()
}
