use super::LatticeLineSet;
use crate::arith::exact_sqrt;
use crate::error::{Error, Result};
use crate::exact::SignVector;
use crate::hadamard::{hadamard_status, sylvester, Status};

/// Largest dimension a line-set constructor will materialise.
pub const MAX_LINE_DIM: usize = 1 << 16;

fn check_sylvester_params(i: u32, s: u64, signs: &[i8]) -> Result<(usize, u64)> {
    if i == 0 {
        return Err(Error::Infeasible("sylvester lines need i >= 1".into()));
    }
    if s == 0 || s.is_multiple_of(2) {
        return Err(Error::Infeasible(format!("s must be a positive odd integer, got {s}")));
    }
    let n = 1usize.checked_shl(i).ok_or(Error::Overflow)?;
    let d = 4u64
        .checked_pow(i)
        .and_then(|p| p.checked_mul(s * s))
        .filter(|&d| d <= MAX_LINE_DIM as u64)
        .ok_or(Error::SizeLimit { what: "line dimension", value: u64::MAX, max: MAX_LINE_DIM as u64 })?;
    if signs.len() != n - 1 {
        return Err(Error::Infeasible(format!("need {} signs, got {}", n - 1, signs.len())));
    }
    if signs.iter().any(|&e| e != 1 && e != -1) {
        return Err(Error::Infeasible("signs must be ±1".into()));
    }
    Ok((n, d))
}

/// Block lengths `b = Hᵗ c` with `c = (2^i s², ±s, …, ±s)`.
pub fn sylvester_block_lengths(i: u32, s: u64, signs: &[i8]) -> Result<Vec<i64>> {
    let (n, _) = check_sylvester_params(i, s, signs)?;
    let h = sylvester(i)?;
    let s = s as i64;
    let c: Vec<i64> = std::iter::once((n as i64) * s * s)
        .chain(signs.iter().map(|&e| e as i64 * s))
        .collect();
    let b: Vec<i64> = (0..n)
        .map(|j| (0..n).map(|k| h.get(k, j) as i64 * c[k]).sum())
        .collect();
    if let Some((j, len)) = b.iter().enumerate().find(|(_, &len)| len < 0) {
        return Err(Error::Infeasible(format!("block {j} would have negative length {len}")));
    }
    Ok(b)
}

/// `2^i` lines in dimension `4^i s²`: line `k` is the concatenation of
/// `s_{k,j}·(1, …, 1)` blocks of length `b_j`.
pub fn sylvester_lines(i: u32, s: u64, signs: &[i8]) -> Result<LatticeLineSet> {
    let (n, d) = check_sylvester_params(i, s, signs)?;
    let b = sylvester_block_lengths(i, s, signs)?;
    debug_assert_eq!(b.iter().sum::<i64>() as u64, d);
    let h = sylvester(i)?;
    let lines = (0..n)
        .map(|k| {
            let entries = (0..n)
                .flat_map(|j| std::iter::repeat_n(h.get(k, j), b[j] as usize))
                .collect();
            SignVector::new(entries)
        })
        .collect::<Result<Vec<_>>>()?;
    let set = LatticeLineSet::new(d as usize, lines)?;
    if let Some(v) = set.violation() {
        return Err(Error::Verification(format!("sylvester lines: {v}")));
    }
    Ok(set)
}

/// `d − √d` lines: the rows of a Hadamard matrix of order `d − √d`, each
/// followed by `√d` ones.
pub fn greedy_lines(d: usize) -> Result<LatticeLineSet> {
    if d > MAX_LINE_DIM {
        return Err(Error::SizeLimit { what: "line dimension", value: d as u64, max: MAX_LINE_DIM as u64 });
    }
    let r = exact_sqrt(d as u64)
        .ok_or_else(|| Error::Infeasible(format!("√{d} is not an integer")))? as usize;
    let order = d - r;
    if order == 0 {
        return Err(Error::Infeasible(format!("d − √d = 0 for d = {d}")));
    }
    let recipe = match hadamard_status(order).status {
        Status::Constructive(r) => r,
        Status::Impossible => {
            return Err(Error::Infeasible(format!("no Hadamard matrix of order d − √d = {order} exists")))
        }
        Status::Unknown => {
            return Err(Error::Infeasible(format!("no constructive Hadamard matrix of order d − √d = {order}")))
        }
    };
    let h = recipe.build()?.with_positive_first_column();
    let lines = (0..order)
        .map(|k| {
            let mut entries = h.row(k).to_vec();
            entries.extend(std::iter::repeat_n(1, r));
            SignVector::new(entries)
        })
        .collect::<Result<Vec<_>>>()?;
    let set = LatticeLineSet::new(d, lines)?;
    if let Some(v) = set.violation() {
        return Err(Error::Verification(format!("greedy lines: {v}")));
    }
    Ok(set)
}
