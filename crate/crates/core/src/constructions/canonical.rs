use super::MubSet;
use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::exact::{dot_slices, is_orthonormal, ScaledBasis};

/// Divides out the largest common coordinate factor `t` with `t² | scale_sq`.
fn reduce(scale_sq: i64, columns: Vec<Vec<i64>>) -> Result<ScaledBasis> {
    let g = columns.iter().flatten().fold(0, |acc, &x| gcd(acc, x));
    let t = (1..=g.max(1)).rev().find(|&t| g % t == 0 && scale_sq % (t * t) == 0).unwrap_or(1);
    let columns = columns
        .into_iter()
        .map(|c| c.into_iter().map(|x| x / t).collect())
        .collect();
    ScaledBasis::new(scale_sq / (t * t), columns)
}

/// Rotates the set so the first basis is the identity: every other basis
/// becomes `B₁ᵗ B_j` (exact, since `B₁⁻¹ = B₁ᵗ / n₁`). Rows are then
/// negated so the second basis has an all-positive first column.
pub fn canonical_form(mubs: &MubSet) -> Result<MubSet> {
    canonical_with_flip(mubs).map(|(set, _)| set)
}

/// Same as [`canonical_form`], also returning which rows were negated.
pub(crate) fn canonical_with_flip(mubs: &MubSet) -> Result<(MubSet, Vec<bool>)> {
    let first = &mubs.bases()[0];
    if !is_orthonormal(first) {
        return Err(Error::Verification(
            "first basis is not orthonormal, so its transpose is not its inverse".into(),
        ));
    }
    let d = mubs.dim();
    let mut rotated = Vec::with_capacity(mubs.len() - 1);
    for b in &mubs.bases()[1..] {
        let columns = b
            .columns()
            .iter()
            .map(|c| {
                first
                    .columns()
                    .iter()
                    .map(|r| dot_slices(r.coords(), c.coords()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let scale = first.scale_sq().checked_mul(b.scale_sq()).ok_or(Error::Overflow)?;
        rotated.push((scale, columns));
    }
    let flip: Vec<bool> = match rotated.first() {
        Some((_, cols)) => (0..d).map(|r| cols[0][r] < 0).collect(),
        None => vec![false; d],
    };
    for (_, cols) in rotated.iter_mut() {
        for col in cols.iter_mut() {
            for (x, &f) in col.iter_mut().zip(&flip) {
                if f {
                    *x = -*x;
                }
            }
        }
    }
    let mut bases = vec![ScaledBasis::identity(d)];
    for (scale, cols) in rotated {
        bases.push(reduce(scale, cols)?);
    }
    Ok((MubSet::new(d, bases)?, flip))
}
