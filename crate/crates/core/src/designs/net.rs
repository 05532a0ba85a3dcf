use std::fmt;
use std::str::FromStr;

use super::{are_orthogonal, LatinSquare};
use crate::arith::exact_sqrt;
use crate::error::{Error, Result};
use crate::exact::linalg;

/// A 0/1 vector of length `s²` with exactly `s` ones.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IncidenceVector {
    bits: Vec<bool>,
}

impl IncidenceVector {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        let s = exact_sqrt(bits.len() as u64)
            .filter(|&s| s > 0)
            .ok_or_else(|| Error::Malformed(format!("incidence vector length {} is not a positive square", bits.len())))?;
        let w = bits.iter().filter(|&&b| b).count() as u64;
        if w != s {
            return Err(Error::Malformed(format!("incidence vector of length {} has weight {w}, expected {s}", bits.len())));
        }
        Ok(Self { bits })
    }

    pub fn from_support(len: usize, support: &[usize]) -> Result<Self> {
        let mut bits = vec![false; len];
        for &p in support {
            *bits.get_mut(p).ok_or_else(|| Error::Malformed(format!("support position {p} out of range")))? = true;
        }
        Self::new(bits)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Ascending support positions.
    pub fn support(&self) -> Vec<usize> {
        self.bits.iter().enumerate().filter_map(|(i, &b)| b.then_some(i)).collect()
    }

    pub fn overlap(&self, other: &Self) -> usize {
        self.bits.iter().zip(&other.bits).filter(|(&a, &b)| a && b).count()
    }

    pub fn to_ints(&self) -> Vec<i64> {
        self.bits.iter().map(|&b| b as i64).collect()
    }
}

impl fmt::Display for IncidenceVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for IncidenceVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Malformed(format!("unexpected character {other:?} in incidence string"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(bits)
    }
}

/// `k` blocks of `s` incidence vectors on `s²` points. The constructor checks
/// shape only; [`is_net`] checks the two net axioms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Net {
    s: usize,
    blocks: Vec<Vec<IncidenceVector>>,
}

/// Which net axiom fails, with the offending indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NetViolation {
    /// `m_{b,i}ᵗ m_{b,j} ≠ 0`
    NotDisjoint { block: usize, i: usize, j: usize },
    /// `m_{b,i}ᵗ m_{c,j} ≠ 1`
    NotSingleIntersection { block_a: usize, i: usize, block_b: usize, j: usize, overlap: usize },
}

impl fmt::Display for NetViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NetViolation::NotDisjoint { block, i, j } => {
                write!(f, "block {block}: vectors {i} and {j} have overlapping supports")
            }
            NetViolation::NotSingleIntersection { block_a, i, block_b, j, overlap } => write!(
                f,
                "block {block_a} vector {i} meets block {block_b} vector {j} in {overlap} points, expected 1"
            ),
        }
    }
}

impl Net {
    pub fn new(s: usize, blocks: Vec<Vec<IncidenceVector>>) -> Result<Self> {
        if s == 0 {
            return Err(Error::Malformed("net parameter s must be positive".into()));
        }
        for (b, block) in blocks.iter().enumerate() {
            if block.len() != s {
                return Err(Error::Malformed(format!("block {b} has {} vectors, expected {s}", block.len())));
            }
            if let Some(m) = block.iter().find(|m| m.len() != s * s) {
                return Err(Error::Malformed(format!("block {b} has a vector of length {}, expected {}", m.len(), s * s)));
            }
        }
        Ok(Self { s, blocks })
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<IncidenceVector>] {
        &self.blocks
    }

    pub fn vectors(&self) -> impl Iterator<Item = &IncidenceVector> {
        self.blocks.iter().flatten()
    }

    pub fn violation(&self) -> Option<NetViolation> {
        for (b, block) in self.blocks.iter().enumerate() {
            for i in 0..self.s {
                for j in i + 1..self.s {
                    if block[i].overlap(&block[j]) != 0 {
                        return Some(NetViolation::NotDisjoint { block: b, i, j });
                    }
                }
            }
        }
        for b in 0..self.k() {
            for c in b + 1..self.k() {
                for i in 0..self.s {
                    for j in 0..self.s {
                        let overlap = self.blocks[b][i].overlap(&self.blocks[c][j]);
                        if overlap != 1 {
                            return Some(NetViolation::NotSingleIntersection { block_a: b, i, block_b: c, j, overlap });
                        }
                    }
                }
            }
        }
        None
    }
}

pub fn is_net(n: &Net) -> bool {
    n.violation().is_none()
}

/// `(|mols| + 2, s)`-net: rows, columns, then the level sets of each square.
/// Cell `(x, y)` is point `x·s + y`.
pub fn net_from_mols(mols: &[LatinSquare], s: usize) -> Result<Net> {
    if s == 0 {
        return Err(Error::Malformed("net parameter s must be positive".into()));
    }
    if let Some(sq) = mols.iter().find(|sq| sq.order() != s) {
        return Err(Error::DimensionMismatch { left: sq.order(), right: s });
    }
    for i in 0..mols.len() {
        for j in i + 1..mols.len() {
            if !are_orthogonal(&mols[i], &mols[j])? {
                return Err(Error::Infeasible(format!("latin squares {i} and {j} are not orthogonal")));
            }
        }
    }
    let n = s * s;
    let from_pred = |pred: &dyn Fn(usize, usize) -> bool| -> Result<IncidenceVector> {
        IncidenceVector::new((0..n).map(|p| pred(p / s, p % s)).collect())
    };
    let mut blocks = Vec::with_capacity(mols.len() + 2);
    blocks.push((0..s).map(|i| from_pred(&|x, _| x == i)).collect::<Result<Vec<_>>>()?);
    blocks.push((0..s).map(|i| from_pred(&|_, y| y == i)).collect::<Result<Vec<_>>>()?);
    for sq in mols {
        blocks.push(
            (0..s)
                .map(|i| from_pred(&|x, y| sq.get(x, y) as usize == i))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    Net::new(s, blocks)
}

/// Rank over ℚ of the `k·s` incidence vectors.
pub fn net_rank(n: &Net) -> usize {
    let rows: Vec<Vec<i64>> = n.vectors().map(IncidenceVector::to_ints).collect();
    linalg::rank(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::gf_mols;

    fn block_strings(n: &Net) -> Vec<Vec<String>> {
        n.blocks().iter().map(|b| b.iter().map(ToString::to_string).collect()).collect()
    }

    #[test]
    fn net_3_2_supports() {
        let net = net_from_mols(&gf_mols(2).unwrap(), 2).unwrap();
        assert_eq!(
            block_strings(&net),
            vec![vec!["1100", "0011"], vec!["1010", "0101"], vec!["1001", "0110"]]
        );
        assert!(is_net(&net));
        assert_eq!(net_rank(&net), 4);
    }

    #[test]
    fn net_5_4() {
        let net = net_from_mols(&gf_mols(4).unwrap(), 4).unwrap();
        assert_eq!((net.k(), net.s()), (5, 4));
        assert_eq!(net.vectors().count(), 20);
        assert!(is_net(&net));
        assert_eq!(net_rank(&net), 16);
    }

    #[test]
    fn rows_and_columns_only() {
        for s in 2..=5 {
            let net = net_from_mols(&[], s).unwrap();
            assert_eq!(net.k(), 2);
            assert!(is_net(&net));
            assert_eq!(net_rank(&net), 2 * s - 1);
        }
    }

    #[test]
    fn full_nets_span() {
        for s in [2usize, 3, 4, 5] {
            let net = net_from_mols(&gf_mols(s as u64).unwrap(), s).unwrap();
            assert_eq!(net.k(), s + 1);
            assert_eq!(net_rank(&net), s * s, "s={s}");
        }
    }

    #[test]
    fn duplicate_blocks_are_not_a_net() {
        let base = net_from_mols(&[], 2).unwrap();
        let rows = base.blocks()[0].clone();
        let dup = Net::new(2, vec![rows.clone(), rows]).unwrap();
        assert!(!is_net(&dup));
        assert!(matches!(dup.violation(), Some(NetViolation::NotSingleIntersection { overlap: 2, .. })));
    }

    #[test]
    fn overlapping_block_is_detected() {
        let a: IncidenceVector = "1100".parse().unwrap();
        let b: IncidenceVector = "0110".parse().unwrap();
        let net = Net::new(2, vec![vec![a, b]]).unwrap();
        assert_eq!(net.violation(), Some(NetViolation::NotDisjoint { block: 0, i: 0, j: 1 }));
    }

    #[test]
    fn non_orthogonal_input_rejected() {
        let sq = gf_mols(3).unwrap();
        assert!(net_from_mols(&[sq[0].clone(), sq[0].clone()], 3).is_err());
        assert!(net_from_mols(&sq, 4).is_err());
    }

    #[test]
    fn incidence_validation() {
        assert!("1100".parse::<IncidenceVector>().is_ok());
        assert!("1110".parse::<IncidenceVector>().is_err());
        assert!("110".parse::<IncidenceVector>().is_err());
        assert_eq!("101000001".parse::<IncidenceVector>().unwrap().support(), vec![0, 2, 8]);
    }
}
