//! Hadamard matrices: Sylvester doubling, Paley I/II over prime fields, and
//! Kronecker products, plus a catalog of which orders are reachable.

mod catalog;

pub use catalog::{
    catalog, construct, hadamard_status, CatalogEntry, HadamardCatalog, HadamardStatus, Recipe,
    Status, CATALOG_LIMIT,
};

use crate::arith::{is_prime, legendre};
use crate::error::{Error, Result};
use crate::exact::SignMatrix;

/// Largest order any constructor will materialise.
pub const MAX_ORDER: usize = 1024;

/// A ±1 matrix with `H·Hᵗ = d·I`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HadamardMatrix {
    matrix: SignMatrix,
}

impl HadamardMatrix {
    pub fn new(matrix: SignMatrix) -> Result<Self> {
        if !is_hadamard(&matrix) {
            return Err(Error::Verification(format!(
                "order-{} matrix does not satisfy H·Hᵗ = d·I",
                matrix.order()
            )));
        }
        Ok(Self { matrix })
    }

    pub fn order(&self) -> usize {
        self.matrix.order()
    }

    pub fn matrix(&self) -> &SignMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> SignMatrix {
        self.matrix
    }

    pub fn row(&self, i: usize) -> &[i8] {
        self.matrix.row(i)
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.matrix.get(i, j)
    }

    /// Row-negated copy whose first column is all +1; still Hadamard.
    pub fn with_positive_first_column(&self) -> Self {
        Self { matrix: self.matrix.with_positive_first_column() }
    }

    pub fn transpose(&self) -> Self {
        Self { matrix: self.matrix.transpose() }
    }
}

/// `M·Mᵗ == order·I`.
pub fn is_hadamard(m: &SignMatrix) -> bool {
    let n = m.order();
    let rows: Vec<&[i8]> = m.rows().collect();
    for i in 0..n {
        for j in i..n {
            let p: i64 = rows[i].iter().zip(rows[j]).map(|(&a, &b)| (a * b) as i64).sum();
            if p != if i == j { n as i64 } else { 0 } {
                return false;
            }
        }
    }
    true
}

fn check_order(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        return Err(Error::SizeLimit { what: "hadamard order", value: order as u64, max: MAX_ORDER as u64 });
    }
    Ok(())
}

/// Order-2^i matrix from `H₂ₖ = [[Hₖ, Hₖ], [Hₖ, −Hₖ]]`.
pub fn sylvester(i: u32) -> Result<HadamardMatrix> {
    let order = 1usize.checked_shl(i).filter(|&o| o <= MAX_ORDER).ok_or(Error::SizeLimit {
        what: "hadamard order",
        value: if i < 64 { 1u64 << i } else { u64::MAX },
        max: MAX_ORDER as u64,
    })?;
    // entry (k, l) is (−1)^popcount(k & l)
    let entries = (0..order * order)
        .map(|idx| {
            let (k, l) = (idx / order, idx % order);
            if (k & l).count_ones() % 2 == 0 {
                1
            } else {
                -1
            }
        })
        .collect();
    HadamardMatrix::new(SignMatrix::new(order, entries)?)
}

/// Paley construction for an odd prime `q`: type I (order `q+1`) when
/// `q ≡ 3 mod 4`, type II (order `2(q+1)`) when `q ≡ 1 mod 4`.
pub fn paley(q: u64) -> Result<HadamardMatrix> {
    if q.is_multiple_of(2) {
        return Err(Error::Infeasible(format!("paley needs an odd prime, got even q = {q}")));
    }
    if !is_prime(q) {
        return Err(Error::Infeasible(format!("paley needs a prime, {q} is not prime")));
    }
    let qn = q as usize;
    let chi = |i: usize, j: usize| legendre(j as i64 - i as i64, q);
    if q % 4 == 3 {
        let n = qn + 1;
        check_order(n)?;
        // H = I + S with S = [[0, 1ᵗ], [−1, Q]] skew
        let mut entries = vec![0i8; n * n];
        for i in 0..n {
            for j in 0..n {
                let s = match (i, j) {
                    (0, 0) => 0,
                    (0, _) => 1,
                    (_, 0) => -1,
                    _ => chi(i - 1, j - 1),
                };
                entries[i * n + j] = if i == j { 1 + s } else { s };
            }
        }
        HadamardMatrix::new(SignMatrix::new(n, entries)?)
    } else {
        let c_order = qn + 1;
        let n = 2 * c_order;
        check_order(n)?;
        // symmetric conference matrix C = [[0, 1ᵗ], [1, Q]], then
        // H = C ⊗ [[1, 1], [1, −1]] + I ⊗ [[1, −1], [−1, −1]]
        let conf = |i: usize, j: usize| -> i8 {
            match (i, j) {
                (0, 0) => 0,
                (0, _) | (_, 0) => 1,
                _ => chi(i - 1, j - 1),
            }
        };
        const OFF: [[i8; 2]; 2] = [[1, 1], [1, -1]];
        const DIAG: [[i8; 2]; 2] = [[1, -1], [-1, -1]];
        let mut entries = vec![0i8; n * n];
        for i in 0..c_order {
            for j in 0..c_order {
                let c = conf(i, j);
                for a in 0..2 {
                    for b in 0..2 {
                        let v = if i == j { DIAG[a][b] } else { c * OFF[a][b] };
                        entries[(2 * i + a) * n + 2 * j + b] = v;
                    }
                }
            }
        }
        HadamardMatrix::new(SignMatrix::new(n, entries)?)
    }
}

/// `A ⊗ B` with entry `((i·n_B + k), (j·n_B + l)) = A[i][j]·B[k][l]`.
pub fn kron(a: &HadamardMatrix, b: &HadamardMatrix) -> Result<HadamardMatrix> {
    let (na, nb) = (a.order(), b.order());
    let n = na.checked_mul(nb).ok_or(Error::Overflow)?;
    check_order(n)?;
    let mut entries = vec![0i8; n * n];
    for i in 0..na {
        for j in 0..na {
            let s = a.get(i, j);
            for k in 0..nb {
                for l in 0..nb {
                    entries[(i * nb + k) * n + j * nb + l] = s * b.get(k, l);
                }
            }
        }
    }
    HadamardMatrix::new(SignMatrix::new(n, entries)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(h: &HadamardMatrix) -> Vec<Vec<i8>> {
        h.matrix().rows().map(<[i8]>::to_vec).collect()
    }

    #[test]
    fn sylvester_small() {
        assert_eq!(rows(&sylvester(0).unwrap()), vec![vec![1]]);
        assert_eq!(rows(&sylvester(1).unwrap()), vec![vec![1, 1], vec![1, -1]]);
        assert_eq!(
            rows(&sylvester(2).unwrap()),
            vec![vec![1, 1, 1, 1], vec![1, -1, 1, -1], vec![1, 1, -1, -1], vec![1, -1, -1, 1]]
        );
        assert!(matches!(sylvester(11), Err(Error::SizeLimit { .. })));
        assert!(matches!(sylvester(200), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn sylvester_matches_doubling_recursion() {
        let mut h = vec![vec![1i8]];
        for i in 1..=6 {
            let k = h.len();
            let mut next = vec![vec![0i8; 2 * k]; 2 * k];
            for r in 0..k {
                for c in 0..k {
                    next[r][c] = h[r][c];
                    next[r][c + k] = h[r][c];
                    next[r + k][c] = h[r][c];
                    next[r + k][c + k] = -h[r][c];
                }
            }
            h = next;
            assert_eq!(rows(&sylvester(i).unwrap()), h);
        }
    }

    #[test]
    fn sylvester_rows_form_xor_group() {
        for i in 0..=6 {
            let h = sylvester(i).unwrap();
            let n = h.order();
            for k in 0..n {
                for l in 0..n {
                    let prod: Vec<i8> = h.row(k).iter().zip(h.row(l)).map(|(a, b)| a * b).collect();
                    assert_eq!(prod.as_slice(), h.row(k ^ l), "i={i} k={k} l={l}");
                }
            }
            assert!(h.row(0).iter().all(|&e| e == 1));
            assert!((0..n).all(|r| h.get(r, 0) == 1));
        }
    }

    #[test]
    fn paley_orders() {
        for (q, order) in [(3, 4), (5, 12), (7, 8), (11, 12), (13, 28), (17, 36), (19, 20), (23, 24)] {
            let h = paley(q).unwrap();
            assert_eq!(h.order(), order, "q={q}");
            assert!(is_hadamard(h.matrix()));
        }
        assert!(matches!(paley(2), Err(Error::Infeasible(_))));
        assert!(matches!(paley(9), Err(Error::Infeasible(_))));
        assert!(matches!(paley(15), Err(Error::Infeasible(_))));
    }

    #[test]
    fn kron_examples() {
        let h1 = sylvester(0).unwrap();
        let h2 = sylvester(1).unwrap();
        assert_eq!(kron(&h2, &h2).unwrap(), sylvester(2).unwrap());
        let h12 = paley(11).unwrap();
        assert_eq!(kron(&h1, &h12).unwrap(), h12);
        let h24 = kron(&h2, &h12).unwrap();
        assert_eq!(h24.order(), 24);
        // A-major block layout
        assert_eq!(h24.get(12, 12), -h12.get(0, 0));
        assert_eq!(h24.get(1, 13), h12.get(1, 1));
    }

    #[test]
    fn is_hadamard_rejects() {
        assert!(!is_hadamard(&SignMatrix::new(2, vec![1, 1, 1, 1]).unwrap()));
        assert!(is_hadamard(sylvester(2).unwrap().matrix()));
        assert!(HadamardMatrix::new(SignMatrix::new(2, vec![1, 1, 1, 1]).unwrap()).is_err());
    }

    #[test]
    fn positive_first_column() {
        let h = paley(11).unwrap().with_positive_first_column();
        assert!((0..12).all(|r| h.get(r, 0) == 1));
        assert!(is_hadamard(h.matrix()));
    }
}
