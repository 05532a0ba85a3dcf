use num_bigint::BigInt;
use num_rational::BigRational;

use crate::designs::Net;
use crate::error::{Error, Result};
use crate::exact::linalg::solve_unique;

/// Solves `⟨m, x⟩ = 1/s` over every incidence vector `m` of the net.
///
/// A complete `(s+1, s)`-net spans the whole space, so the only solution is
/// the flat vector `x = (1/s², …)`. Fewer parallel classes leave the system
/// underdetermined and the solve fails with [`Error::RankDeficient`].
pub fn flat_magnitude_solve(net: &Net) -> Result<Vec<BigRational>> {
    if let Some(v) = net.violation() {
        return Err(Error::Infeasible(format!("not a net: {v}")));
    }
    let s = net.s();
    let rows: Vec<Vec<i64>> = net.vectors().map(|m| m.to_ints()).collect();
    let rhs = vec![BigRational::new(BigInt::from(1), BigInt::from(s)); rows.len()];
    solve_unique(&rows, &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::{gf_mols, net_from_mols, net_rank};

    fn flat(s: usize) -> Vec<BigRational> {
        vec![BigRational::new(BigInt::from(1), BigInt::from(s * s)); s * s]
    }

    #[test]
    fn complete_nets_give_flat_vector() {
        for q in [2u64, 3, 4, 5] {
            let s = q as usize;
            let net = net_from_mols(&gf_mols(q).unwrap(), s).unwrap();
            assert_eq!(net.k(), s + 1);
            assert_eq!(net_rank(&net), s * s);
            assert_eq!(flat_magnitude_solve(&net).unwrap(), flat(s));
        }
    }

    #[test]
    fn two_classes_are_rank_deficient() {
        let net = net_from_mols(&[], 2).unwrap();
        assert_eq!(net.k(), 2);
        assert_eq!(net_rank(&net), 3);
        assert!(matches!(flat_magnitude_solve(&net), Err(Error::RankDeficient { rank: 3, unknowns: 4 })));
    }
}
