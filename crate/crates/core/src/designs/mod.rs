//! Finite fields, mutually orthogonal Latin squares and (k, s)-nets.

mod field;
mod latin;
mod net;

pub use field::FiniteField;
pub use latin::{are_orthogonal, gf_mols, LatinSquare};
pub use net::{is_net, net_from_mols, net_rank, IncidenceVector, Net, NetViolation};
