//! Explicit constructions: Latin MUBs through net embeddings, Sylvester and
//! greedy lattice-line sets, and the identity-first canonical form.

mod canonical;
mod lines;
mod sets;

pub use canonical::canonical_form;
pub(crate) use canonical::canonical_with_flip;
pub use lines::{greedy_lines, sylvester_block_lengths, sylvester_lines, MAX_LINE_DIM};
pub use sets::{LatticeLineSet, LineViolation, MubSet, MubViolation};

use num_traits::Zero;

use crate::designs::{IncidenceVector, Net};
use crate::error::{Error, Result};
use crate::exact::ScaledBasis;
use crate::hadamard::HadamardMatrix;

/// `h ↑ m`: the entries of `h` placed, in order, at the ascending support
/// positions of `m`, zero elsewhere.
pub fn embed<T: Clone + Zero>(h: &[T], m: &IncidenceVector) -> Result<Vec<T>> {
    if h.len() != m.weight() {
        return Err(Error::LengthMismatch { left: h.len(), right: m.weight() });
    }
    let mut out = vec![T::zero(); m.len()];
    for (slot, value) in m.support().into_iter().zip(h) {
        out[slot] = value.clone();
    }
    Ok(out)
}

/// One basis per net block: `{ (h_l ↑ m_{b,i}) / √s }`, block index `i` outer
/// and Hadamard row `l` inner.
pub fn latin_mubs(net: &Net, h: &HadamardMatrix) -> Result<MubSet> {
    let s = net.s();
    if h.order() != s {
        return Err(Error::Infeasible(format!(
            "hadamard order {} does not match net parameter s = {s}",
            h.order()
        )));
    }
    if let Some(v) = net.violation() {
        return Err(Error::Infeasible(format!("not a net: {v}")));
    }
    let rows: Vec<Vec<i64>> = (0..s).map(|l| h.row(l).iter().map(|&e| e as i64).collect()).collect();
    let bases = net
        .blocks()
        .iter()
        .map(|block| {
            let mut columns = Vec::with_capacity(s * s);
            for m in block {
                for row in &rows {
                    columns.push(embed(row, m)?);
                }
            }
            ScaledBasis::new(s as i64, columns)
        })
        .collect::<Result<Vec<_>>>()?;
    let set = MubSet::new(s * s, bases)?;
    if let Some(v) = set.violation() {
        return Err(Error::Verification(format!("latin construction produced a bad set: {v}")));
    }
    Ok(set)
}
