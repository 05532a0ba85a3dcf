//! Exhaustive searches over sign vectors.
//!
//! Candidates are `u64` masks and dot products are `d − 2·popcount(u ^ v)`.
//! Parallel scans always report the lexicographically first witness, so
//! output does not depend on the worker count.

mod budget;
mod clique;
mod complex;
mod enumerate;
mod lines;
mod mub;

pub use budget::{SearchBudget, SearchOutcome, SearchReport};
pub use complex::{latin_d4_complex_certificate, ComplexCertificate};
pub use enumerate::MAX_MASK_DIM;
pub use lines::{
    extend_lattice_lines, max_mutually_unbiased_lines, max_orthogonal_set, max_orthogonal_sign_vectors, MaxLines,
    EXACT_LINES_MAX_DIM, ORTHOGONAL_DIMS,
};
pub use mub::extend_real_mub;
