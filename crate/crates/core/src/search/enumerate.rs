use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::SearchBudget;
use crate::error::{Error, Result};
use crate::exact::SignVector;

const CHUNK: u64 = 1 << 12;

/// Largest dimension whose sign vectors fit a `u64` mask.
pub const MAX_MASK_DIM: usize = 64;

/// Bit `d-1-p` of the mask is set when coordinate `p` is `-1`, so ascending
/// masks are sign strings in lexicographic order with `+` before `-`.
pub(crate) fn to_mask(v: &SignVector) -> u64 {
    let d = v.len();
    v.entries().iter().enumerate().fold(0, |m, (p, &e)| if e < 0 { m | 1 << (d - 1 - p) } else { m })
}

pub(crate) fn from_mask(mask: u64, d: usize) -> SignVector {
    SignVector::new((0..d).map(|p| if mask >> (d - 1 - p) & 1 == 1 { -1 } else { 1 }).collect())
        .expect("mask dimension is positive")
}

pub(crate) fn check_mask_dim(d: usize) -> Result<()> {
    if d == 0 || d > MAX_MASK_DIM {
        return Err(Error::SizeLimit { what: "search dimension", value: d as u64, max: MAX_MASK_DIM as u64 });
    }
    Ok(())
}

/// Number of sign vectors with first coordinate `+1`.
pub(crate) fn line_count(d: usize) -> u64 {
    if d >= 65 {
        u64::MAX
    } else {
        1u64 << (d - 1)
    }
}

pub(crate) struct Scan {
    pub first: Option<u64>,
    pub examined: u64,
    pub complete: bool,
}

/// Finds the smallest index in `0..total` satisfying `pred`.
///
/// Chunks run in parallel; a chunk is skipped once a smaller hit is known,
/// so the reported hit and count are the same for every worker count
/// unless the time limit interrupts the scan.
pub(crate) fn scan<F>(total: u64, budget: &SearchBudget, pred: F) -> Result<Scan>
where
    F: Fn(u64) -> bool + Sync,
{
    let limit = total.min(budget.max_candidates);
    let start = Instant::now();
    let best = AtomicU64::new(u64::MAX);
    let processed = AtomicU64::new(0);
    let timed_out = AtomicBool::new(false);
    let chunks = limit.div_ceil(CHUNK);

    let run = || {
        (0..chunks).into_par_iter().for_each(|c| {
            let lo = c * CHUNK;
            if lo > best.load(Ordering::Relaxed) || timed_out.load(Ordering::Relaxed) {
                return;
            }
            if start.elapsed().as_secs_f64() > budget.max_seconds {
                timed_out.store(true, Ordering::Relaxed);
                return;
            }
            let hi = (lo + CHUNK).min(limit);
            let mut seen = 0;
            for idx in lo..hi {
                seen += 1;
                if pred(idx) {
                    best.fetch_min(idx, Ordering::Relaxed);
                    break;
                }
            }
            processed.fetch_add(seen, Ordering::Relaxed);
        })
    };
    if budget.workers == 0 {
        run();
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(budget.workers)
            .build()
            .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?
            .install(run);
    }

    let timed_out = timed_out.into_inner();
    let best = best.into_inner();
    let first = (best != u64::MAX).then_some(best);
    let examined = match first {
        Some(f) if !timed_out => f + 1,
        None if !timed_out => limit,
        _ => processed.into_inner(),
    };
    Ok(Scan { first, examined, complete: !timed_out && (first.is_some() || limit == total) })
}
