use std::time::Instant;

use super::clique::{max_clique, Graph};
use super::enumerate::{check_mask_dim, from_mask, line_count, scan, to_mask};
use super::{SearchBudget, SearchOutcome, SearchReport};
use crate::arith::exact_sqrt;
use crate::constructions::{greedy_lines, sylvester_lines, LatticeLineSet};
use crate::error::{Error, Result};
use crate::exact::SignVector;

/// Overlap counts `popcount(u ^ v)` at which `|u·v| = √d`.
fn unbiased_popcounts(d: usize) -> Option<(u32, u32)> {
    let r = exact_sqrt(d as u64)? as usize;
    Some(((d - r) as u32 / 2, (d + r) as u32 / 2))
}

fn is_unbiased_mask(a: u64, b: u64, pops: (u32, u32)) -> bool {
    let p = (a ^ b).count_ones();
    p == pops.0 || p == pops.1
}

/// Searches every line `w` (first coordinate `+`) for one with
/// `|w·l| = √d` against each line `l` of `ls`.
pub fn extend_lattice_lines(ls: &LatticeLineSet, budget: &SearchBudget) -> Result<SearchReport<SignVector>> {
    budget.validate()?;
    let start = Instant::now();
    let d = ls.dim();
    if d < 2 {
        return Err(Error::Malformed(format!("dimension must be at least 2, got {d}")));
    }
    let Some(pops) = unbiased_popcounts(d) else {
        return Ok(SearchReport { outcome: SearchOutcome::ExhaustedNone, candidates_examined: 0, elapsed: start.elapsed() });
    };
    check_mask_dim(d)?;
    let masks: Vec<u64> = ls.lines().iter().map(to_mask).collect();
    let s = scan(line_count(d), budget, |w| masks.iter().all(|&m| is_unbiased_mask(w, m, pops)))?;
    let outcome = match (s.first, s.complete) {
        (Some(w), _) => SearchOutcome::Found(from_mask(w, d)),
        (None, true) => SearchOutcome::ExhaustedNone,
        (None, false) => SearchOutcome::BudgetExceeded(None),
    };
    SearchReport { outcome, candidates_examined: s.examined, elapsed: start.elapsed() }.enforce(budget)
}

/// Largest dimension for which the line maximum is settled by a full clique search.
pub const EXACT_LINES_MAX_DIM: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxLines {
    pub size: usize,
    pub exact: bool,
    pub witness: LatticeLineSet,
}

/// Maximum set of mutually unbiased lattice lines in dimension `d`.
///
/// Exact by clique search up to [`EXACT_LINES_MAX_DIM`]. Beyond that the
/// larger of the known constructions is grown one line at a time while a
/// full scan of the candidates fits the budget, and `exact` is false.
pub fn max_mutually_unbiased_lines(d: usize, budget: &SearchBudget) -> Result<MaxLines> {
    budget.validate()?;
    if d < 2 {
        return Err(Error::Malformed(format!("dimension must be at least 2, got {d}")));
    }
    let Some(pops) = unbiased_popcounts(d) else {
        let witness = LatticeLineSet::new(d, vec![SignVector::ones(d)])?;
        return Ok(MaxLines { size: 1, exact: true, witness });
    };
    if d <= EXACT_LINES_MAX_DIM {
        let n = line_count(d) as usize;
        let g = Graph::from_predicate(n, |i, j| is_unbiased_mask(i as u64, j as u64, pops));
        let r = max_clique(&g, usize::MAX, Some((Instant::now(), budget.max_seconds)));
        let lines = r.clique.iter().map(|&i| from_mask(i as u64, d)).collect();
        let witness = LatticeLineSet::new(d, lines)?;
        return Ok(MaxLines { size: witness.len(), exact: r.complete, witness });
    }

    let r = exact_sqrt(d as u64).expect("square checked above");
    let mut best = greedy_lines(d).ok();
    let (i, s) = split_power_of_four(r);
    if i > 0 {
        if let Ok(syl) = sylvester_lines(i, s, &vec![1; (1 << i) - 1]) {
            if best.as_ref().is_none_or(|b| syl.len() > b.len()) {
                best = Some(syl);
            }
        }
    }
    let mut witness = match best {
        Some(b) => b,
        None => LatticeLineSet::new(d, vec![SignVector::ones(d)])?,
    };
    if d <= super::enumerate::MAX_MASK_DIM && line_count(d) <= budget.max_candidates {
        let quiet = SearchBudget { exact_required: false, ..*budget };
        while let SearchOutcome::Found(w) = extend_lattice_lines(&witness, &quiet)?.outcome {
            let mut lines = witness.lines().to_vec();
            lines.push(w);
            witness = LatticeLineSet::new(d, lines)?;
        }
    }
    Ok(MaxLines { size: witness.len(), exact: false, witness })
}

/// `r = 2^i · s` with `s` odd.
fn split_power_of_four(mut r: u64) -> (u32, u64) {
    let mut i = 0;
    while r > 0 && r.is_multiple_of(2) {
        r /= 2;
        i += 1;
    }
    (i, r)
}

/// Supported dimensions for [`max_orthogonal_sign_vectors`].
pub const ORTHOGONAL_DIMS: std::ops::RangeInclusive<usize> = 2..=16;

/// A largest pairwise-orthogonal set of `±1` vectors in dimension `d`.
///
/// Sign changes of coordinates and coordinate permutations preserve
/// orthogonality, so the first three vectors are fixed to `1`,
/// `+…+−…−` (halves) and `+−+−` in quarter blocks; the rest is a clique
/// search among lines orthogonal to all three.
pub fn max_orthogonal_set(d: usize) -> Result<Vec<SignVector>> {
    if !ORTHOGONAL_DIMS.contains(&d) {
        return Err(Error::SizeLimit { what: "orthogonal search dimension", value: d as u64, max: *ORTHOGONAL_DIMS.end() as u64 });
    }
    let orthogonal = |a: u64, b: u64| 2 * (a ^ b).count_ones() as usize == d;
    let all: Vec<u64> = (0..line_count(d)).collect();

    let mut fixed = vec![0u64];
    let c1: Vec<u64> = all.iter().copied().filter(|&w| orthogonal(w, 0)).collect();
    if !c1.is_empty() {
        fixed.push((1 << (d / 2)) - 1);
        let c2: Vec<u64> = c1.iter().copied().filter(|&w| orthogonal(w, fixed[1])).collect();
        if !c2.is_empty() {
            let q = d / 4;
            fixed.push(((1 << q) - 1) << (2 * q) | ((1 << q) - 1));
        }
    }
    let rest: Vec<u64> = all.iter().copied().filter(|&w| fixed.iter().all(|&f| orthogonal(w, f))).collect();
    let g = Graph::from_predicate(rest.len(), |i, j| orthogonal(rest[i], rest[j]));
    let target = d.saturating_sub(fixed.len());
    let clique = max_clique(&g, target, None).clique;
    let set: Vec<SignVector> =
        fixed.iter().copied().chain(clique.iter().map(|&i| rest[i])).map(|m| from_mask(m, d)).collect();
    debug_assert!(set.iter().enumerate().all(|(a, u)| set[a + 1..].iter().all(|v| u.dot(v) == Ok(0))));
    Ok(set)
}

pub fn max_orthogonal_sign_vectors(d: usize) -> Result<usize> {
    max_orthogonal_set(d).map(|s| s.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn full() -> SearchBudget {
        SearchBudget { exact_required: true, ..SearchBudget::default() }
    }

    fn set(d: usize, lines: &[&str]) -> LatticeLineSet {
        LatticeLineSet::new(d, lines.iter().map(|l| l.parse().unwrap()).collect()).unwrap()
    }

    #[test]
    fn sylvester_16_cannot_be_extended() {
        let ls = sylvester_lines(2, 1, &[1, 1, 1]).unwrap();
        let r = extend_lattice_lines(&ls, &full()).unwrap();
        assert_eq!(r.outcome, SearchOutcome::ExhaustedNone);
        assert_eq!(r.candidates_examined, 1 << 15);
    }

    #[test]
    fn d4_pair_is_maximal() {
        let r = extend_lattice_lines(&set(4, &["++++", "+++-"]), &full()).unwrap();
        assert_eq!(r.outcome, SearchOutcome::ExhaustedNone);
        assert_eq!(r.candidates_examined, 8);
    }

    #[test]
    fn empty_set_takes_first_candidate() {
        let r = extend_lattice_lines(&set(4, &[]), &full()).unwrap();
        assert_eq!(r.outcome, SearchOutcome::Found("++++".parse().unwrap()));
        assert_eq!(r.candidates_examined, 1);
    }

    #[test]
    fn non_square_is_immediate() {
        let r = extend_lattice_lines(&set(8, &[]), &full()).unwrap();
        assert_eq!((r.outcome, r.candidates_examined), (SearchOutcome::ExhaustedNone, 0));
    }

    #[test]
    fn budget_exceeded() {
        let ls = sylvester_lines(2, 1, &[1, 1, 1]).unwrap();
        let cut = SearchBudget::new(100, 60.0, false).unwrap();
        let r = extend_lattice_lines(&ls, &cut).unwrap();
        assert_eq!((r.outcome, r.candidates_examined), (SearchOutcome::BudgetExceeded(None), 100));
        let strict = SearchBudget { exact_required: true, ..cut };
        assert!(matches!(extend_lattice_lines(&ls, &strict), Err(Error::BudgetExceeded { examined: 100 })));
    }

    #[test]
    fn max_lines_small() {
        let b = SearchBudget::default();
        let r4 = max_mutually_unbiased_lines(4, &b).unwrap();
        assert_eq!((r4.size, r4.exact), (2, true));
        assert!(r4.witness.violation().is_none());
        let r8 = max_mutually_unbiased_lines(8, &b).unwrap();
        assert_eq!((r8.size, r8.exact), (1, true));
        let r9 = max_mutually_unbiased_lines(9, &b).unwrap();
        assert!(r9.exact);
        assert!(r9.witness.violation().is_none());
    }

    #[test]
    fn max_lines_16_from_witness() {
        let r = max_mutually_unbiased_lines(16, &SearchBudget::default()).unwrap();
        assert!(!r.exact);
        assert!(r.size >= 12);
        assert!(r.witness.violation().is_none());
        assert_eq!(extend_lattice_lines(&r.witness, &full()).unwrap().outcome, SearchOutcome::ExhaustedNone);
        // the unextendable Sylvester lines are never contained in a reported set
        let syl = sylvester_lines(2, 1, &[1, 1, 1]).unwrap();
        assert!(!syl.lines().iter().all(|l| r.witness.contains(l)));
    }

    #[test]
    fn orthogonal_examples() {
        assert_eq!(max_orthogonal_sign_vectors(3).unwrap(), 1);
        assert_eq!(max_orthogonal_sign_vectors(6).unwrap(), 2);
        assert_eq!(max_orthogonal_sign_vectors(4).unwrap(), 4);
        assert!(max_orthogonal_sign_vectors(1).is_err());
        assert!(max_orthogonal_sign_vectors(17).is_err());
    }

    /// Plain clique search over every line, no symmetry fixing.
    fn oracle(d: usize) -> usize {
        let n = 1usize << (d - 1);
        let g = Graph::from_predicate(n, |i, j| 2 * ((i ^ j) as u64).count_ones() as usize == d);
        max_clique(&g, usize::MAX, None).clique.len()
    }

    #[test]
    fn orthogonal_matches_unreduced_oracle() {
        for d in 2..=10 {
            assert_eq!(max_orthogonal_sign_vectors(d).unwrap(), oracle(d), "d={d}");
        }
    }

    #[test]
    fn orthogonal_four_iff_divisible_by_four() {
        for d in ORTHOGONAL_DIMS {
            let m = max_orthogonal_sign_vectors(d).unwrap();
            assert_eq!(m >= 4, d % 4 == 0, "d={d} m={m}");
            if d % 4 == 0 {
                assert_eq!(m, d);
            }
        }
    }
}
