use std::time::Instant;

use super::enumerate::{check_mask_dim, from_mask, line_count, scan};
use super::{SearchBudget, SearchOutcome, SearchReport};
use crate::arith::{exact_sqrt, gcd};
use crate::constructions::{canonical_with_flip, MubSet};
use crate::error::{Error, Result};
use crate::exact::ScaledVector;

/// Searches for a flat vector unbiased to every vector of every basis.
///
/// Any real basis extending the set can be rotated so the first basis is
/// the identity, after which all its vectors are flat `±1/√d`. This scans
/// all `2^(d-1)` of those in the canonical frame, so `ExhaustedNone` rules
/// out any real extension. A found vector is mapped back to the input frame.
pub fn extend_real_mub(ms: &MubSet, budget: &SearchBudget) -> Result<SearchReport<ScaledVector>> {
    budget.validate()?;
    let start = Instant::now();
    if let Some(v) = ms.violation() {
        return Err(Error::Infeasible(format!("input is not a MUB set: {v}")));
    }
    let d = ms.dim();
    check_mask_dim(d)?;
    let (canon, flip) = canonical_with_flip(ms)?;

    let mut constraints = Vec::new();
    for (j, basis) in canon.bases().iter().enumerate().skip(1) {
        for (k, col) in basis.columns().iter().enumerate() {
            let a = col.coords()[0].abs();
            let flat = a > 0
                && col.coords().iter().all(|x| x.abs() == a)
                && (a as i128 * a as i128 * d as i128) == col.scale_sq() as i128;
            if !flat {
                return Err(Error::Verification(format!("canonical basis {j} column {k} is not flat")));
            }
            let mask = col.coords().iter().enumerate().fold(0u64, |m, (p, &x)| if x < 0 { m | 1 << (d - 1 - p) } else { m });
            constraints.push(mask);
        }
    }
    if !constraints.is_empty() && exact_sqrt(d as u64).is_none() {
        return Ok(SearchReport { outcome: SearchOutcome::ExhaustedNone, candidates_examined: 0, elapsed: start.elapsed() });
    }
    let r = exact_sqrt(d as u64).unwrap_or(0) as usize;
    let pops = ((d - r) / 2) as u32;
    let pops_hi = ((d + r) / 2) as u32;
    let s = scan(line_count(d), budget, |w| {
        constraints.iter().all(|&c| {
            let p = (w ^ c).count_ones();
            p == pops || p == pops_hi
        })
    })?;
    let outcome = match (s.first, s.complete) {
        (Some(w), _) => SearchOutcome::Found(to_input_frame(ms, &flip, w)?),
        (None, true) => SearchOutcome::ExhaustedNone,
        (None, false) => SearchOutcome::BudgetExceeded(None),
    };
    SearchReport { outcome, candidates_examined: s.examined, elapsed: start.elapsed() }.enforce(budget)
}

/// `v = B₁ · D · w`, undoing the rotation and row negations.
fn to_input_frame(ms: &MubSet, flip: &[bool], mask: u64) -> Result<ScaledVector> {
    let d = ms.dim();
    let first = &ms.bases()[0];
    let w = from_mask(mask, d);
    let mut coords = vec![0i64; d];
    for (k, col) in first.columns().iter().enumerate() {
        let sign = w.entries()[k] as i64 * if flip[k] { -1 } else { 1 };
        for (c, &x) in coords.iter_mut().zip(col.coords()) {
            *c = x.checked_mul(sign).and_then(|y| c.checked_add(y)).ok_or(Error::Overflow)?;
        }
    }
    let mut scale = first.scale_sq().checked_mul(d as i64).ok_or(Error::Overflow)?;
    let g = coords.iter().fold(0, |acc, &x| gcd(acc, x));
    if let Some(t) = (1..=g.max(1)).rev().find(|&t| g % t == 0 && scale % (t * t) == 0) {
        coords.iter_mut().for_each(|x| *x /= t);
        scale /= t * t;
    }
    ScaledVector::new(coords, scale)
}
