use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{is_orthonormal, unbiased_violation, ScaledBasis, SignVector};

/// A collection of bases in one dimension. Construction checks shape; the
/// MUB conditions are reported by [`MubSet::violation`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MubSet {
    dim: usize,
    bases: Vec<ScaledBasis>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MubViolation {
    NotOrthonormal { basis: usize, col_a: usize, col_b: usize },
    Biased { basis_a: usize, col_a: usize, basis_b: usize, col_b: usize },
}

impl fmt::Display for MubViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MubViolation::NotOrthonormal { basis, col_a, col_b } if col_a == col_b => {
                write!(f, "basis {basis} column {col_a} is not a unit vector")
            }
            MubViolation::NotOrthonormal { basis, col_a, col_b } => {
                write!(f, "basis {basis}: columns {col_a} and {col_b} are not orthogonal")
            }
            MubViolation::Biased { basis_a, col_a, basis_b, col_b } => write!(
                f,
                "basis {basis_a} column {col_a} and basis {basis_b} column {col_b} are not unbiased"
            ),
        }
    }
}

impl MubSet {
    pub fn new(dim: usize, bases: Vec<ScaledBasis>) -> Result<Self> {
        if bases.is_empty() {
            return Err(Error::Malformed("a MUB set needs at least one basis".into()));
        }
        if let Some(b) = bases.iter().find(|b| b.dim() != dim) {
            return Err(Error::DimensionMismatch { left: b.dim(), right: dim });
        }
        Ok(Self { dim, bases })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bases(&self) -> &[ScaledBasis] {
        &self.bases
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    /// First failing condition in basis order, or `None` for a valid set.
    pub fn violation(&self) -> Option<MubViolation> {
        for (k, b) in self.bases.iter().enumerate() {
            if let Some((col_a, col_b)) = b.orthonormality_violation() {
                return Some(MubViolation::NotOrthonormal { basis: k, col_a, col_b });
            }
        }
        for a in 0..self.bases.len() {
            for b in a + 1..self.bases.len() {
                // dimensions agree by construction; overflow counts as a failure
                match unbiased_violation(&self.bases[a], &self.bases[b]) {
                    Ok(None) => {}
                    Ok(Some((col_a, col_b))) => {
                        return Some(MubViolation::Biased { basis_a: a, col_a, basis_b: b, col_b })
                    }
                    Err(_) => return Some(MubViolation::Biased { basis_a: a, col_a: 0, basis_b: b, col_b: 0 }),
                }
            }
        }
        None
    }

    pub fn all_orthonormal(&self) -> bool {
        self.bases.iter().all(is_orthonormal)
    }
}

/// ±1 line representatives in one dimension, each stored with first
/// coordinate +1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeLineSet {
    dim: usize,
    lines: Vec<SignVector>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineViolation {
    Duplicate { i: usize, j: usize },
    Biased { i: usize, j: usize, dot: i64 },
}

impl fmt::Display for LineViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineViolation::Duplicate { i, j } => write!(f, "lines {i} and {j} coincide up to sign"),
            LineViolation::Biased { i, j, dot } => {
                write!(f, "lines {i} and {j} have inner product {dot}, need ±√d")
            }
        }
    }
}

impl LatticeLineSet {
    pub fn new(dim: usize, lines: Vec<SignVector>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Malformed("dimension must be positive".into()));
        }
        if let Some(l) = lines.iter().find(|l| l.len() != dim) {
            return Err(Error::LengthMismatch { left: l.len(), right: dim });
        }
        let lines = lines.iter().map(SignVector::normalized).collect();
        Ok(Self { dim, lines })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lines(&self) -> &[SignVector] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// Pairwise `d·(u·v)² = d²`, and no line repeated.
    pub fn violation(&self) -> Option<LineViolation> {
        let d = self.dim as i64;
        for i in 0..self.lines.len() {
            for j in i + 1..self.lines.len() {
                if self.lines[i] == self.lines[j] {
                    return Some(LineViolation::Duplicate { i, j });
                }
                let dot = self.lines[i].dot(&self.lines[j]).expect("lengths checked");
                if (d as i128) * (dot as i128 * dot as i128) != (d as i128) * (d as i128) {
                    return Some(LineViolation::Biased { i, j, dot });
                }
            }
        }
        None
    }

    pub fn contains(&self, line: &SignVector) -> bool {
        let n = line.normalized();
        self.lines.contains(&n)
    }
}
