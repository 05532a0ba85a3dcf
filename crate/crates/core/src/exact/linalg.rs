//! Gauss–Jordan elimination over arbitrary-precision rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

fn to_rational_rows(rows: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect()
}

/// Reduces `m` in place to reduced row echelon form; returns the pivot columns.
/// Only the first `cols` columns are eligible as pivots.
fn rref(m: &mut [Vec<BigRational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (x, p) in other.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Rank over ℚ of the integer rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut m = to_rational_rows(rows);
    rref(&mut m, width).len()
}

/// The unique solution of `A x = b`. Fails when the system is inconsistent
/// or has a nontrivial kernel.
pub fn solve_unique(a: &[Vec<i64>], b: &[BigRational]) -> Result<Vec<BigRational>> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    let unknowns = a.first().map(Vec::len).unwrap_or(0);
    let mut m: Vec<Vec<BigRational>> = to_rational_rows(a)
        .into_iter()
        .zip(b)
        .map(|(mut row, rhs)| {
            row.push(rhs.clone());
            row
        })
        .collect();
    let pivots = rref(&mut m, unknowns);
    // a zero coefficient row with a nonzero right-hand side
    if m[pivots.len()..].iter().any(|row| !row[unknowns].is_zero()) {
        return Err(Error::Inconsistent);
    }
    if pivots.len() < unknowns {
        return Err(Error::RankDeficient { rank: pivots.len(), unknowns });
    }
    debug_assert!(pivots.iter().enumerate().all(|(i, &c)| i == c && m[i][c].is_one()));
    Ok(m.iter().take(unknowns).map(|row| row[unknowns].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rank_small() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![0, 0]]), 0);
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]), 2);
        assert_eq!(rank(&[vec![2, 0], vec![0, 3], vec![1, 1]]), 2);
    }

    #[test]
    fn solve_overdetermined_consistent() {
        let a = vec![vec![1, 1], vec![1, -1], vec![2, 0]];
        let b = vec![q(3, 1), q(1, 1), q(4, 1)];
        assert_eq!(solve_unique(&a, &b).unwrap(), vec![q(2, 1), q(1, 1)]);
    }

    #[test]
    fn solve_errors() {
        let a = vec![vec![1, 1], vec![2, 2]];
        assert_eq!(
            solve_unique(&a, &[q(1, 1), q(2, 1)]),
            Err(Error::RankDeficient { rank: 1, unknowns: 2 })
        );
        assert_eq!(solve_unique(&a, &[q(1, 1), q(3, 1)]), Err(Error::Inconsistent));
    }

    #[test]
    fn solve_with_fractions() {
        let a = vec![vec![3, 0], vec![0, 7]];
        assert_eq!(solve_unique(&a, &[q(1, 1), q(1, 2)]).unwrap(), vec![q(1, 3), q(1, 14)]);
    }
}
