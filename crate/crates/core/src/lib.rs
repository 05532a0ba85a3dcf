//! Exact construction, verification and exhaustive search for real mutually
//! unbiased bases (MUBs) and the combinatorial objects behind them.
//!
//! Every orthogonality and unbiasedness test is an integer identity: vectors
//! carry integer coordinates plus an integer scale `n` and stand for
//! `coords / √n`. Floating point only appears in the numeric half of the
//! d = 4 complex unextendibility certificate.
//!
//! - [`exact`]: scaled integer vectors and bases, exact rational rank/solve.
//! - [`hadamard`]: Sylvester, Paley and Kronecker constructions and a catalog.
//! - [`designs`]: finite fields, MOLS and (k, s)-nets.
//! - [`constructions`]: Latin MUBs, Sylvester and greedy lattice lines,
//!   canonical form.
//! - [`analysis`]: dimension classes, bound reports, commuting classes,
//!   the flat-magnitude system.
//! - [`search`]: brute-force extension and maximum-set searches.

pub mod analysis;
pub mod arith;
pub mod constructions;
pub mod designs;
pub mod error;
pub mod exact;
pub mod hadamard;
pub mod search;

pub use analysis::{
    bounds, bounds_with, classify, commuting_classes, counting_bound_check, flat_magnitude_solve,
    is_lattice_line_set, is_mub_set, mols_lower_bound, verify_commuting_classes, BoundOptions,
    BoundReport, CommutingClassSet, DimensionClass,
};
pub use constructions::{
    canonical_form, embed, greedy_lines, latin_mubs, sylvester_lines, LatticeLineSet, MubSet,
};
pub use designs::{gf_mols, is_net, net_from_mols, net_rank, IncidenceVector, LatinSquare, Net};
pub use error::{Error, Result};
pub use exact::{dot, is_orthonormal, is_unbiased_pair, ScaledBasis, ScaledVector, SignMatrix, SignVector};
pub use hadamard::{hadamard_status, is_hadamard, kron, paley, sylvester, HadamardMatrix, HadamardStatus};
pub use search::{
    extend_lattice_lines, extend_real_mub, latin_d4_complex_certificate, max_mutually_unbiased_lines,
    max_orthogonal_sign_vectors, SearchBudget, SearchOutcome, SearchReport,
};
