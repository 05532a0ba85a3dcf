//! Exact scaled-integer vectors and bases.
//!
//! A [`ScaledVector`] with coordinates `c` and scale `n` stands for the real
//! vector `c / √n`. Every orthogonality and unbiasedness predicate is then an
//! identity between integers: two vectors `c/√n`, `c'/√n'` in dimension `d`
//! have normalized overlap `1/√d` exactly when `d · (c·c')² = n · n'`.

pub mod linalg;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer coordinates `coords` representing `coords / √scale_sq`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ScaledVector {
    coords: Vec<i64>,
    scale_sq: i64,
}

impl ScaledVector {
    pub fn new(coords: Vec<i64>, scale_sq: i64) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Malformed("vector must have at least one coordinate".into()));
        }
        if scale_sq < 1 {
            return Err(Error::Malformed(format!("scale_sq must be positive, got {scale_sq}")));
        }
        Ok(Self { coords, scale_sq })
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn scale_sq(&self) -> i64 {
        self.scale_sq
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Σ coordsᵢ², which equals `scale_sq` for a unit vector.
    pub fn norm_sq(&self) -> Result<i64> {
        dot(self, self)
    }

    pub fn is_unit(&self) -> bool {
        self.norm_sq().is_ok_and(|n| n == self.scale_sq)
    }

    /// Multiplies coordinates by `t` and the scale by `t²`; the represented
    /// real vector is unchanged up to the sign of `t`.
    pub fn rescaled(&self, t: i64) -> Result<Self> {
        if t == 0 {
            return Err(Error::Malformed("rescale factor must be nonzero".into()));
        }
        let coords = self
            .coords
            .iter()
            .map(|&c| c.checked_mul(t).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        let scale_sq = self
            .scale_sq
            .checked_mul(t)
            .and_then(|s| s.checked_mul(t))
            .ok_or(Error::Overflow)?;
        Ok(Self { coords, scale_sq })
    }
}

/// Raw integer inner product Σ uᵢvᵢ, ignoring the scales.
pub fn dot(u: &ScaledVector, v: &ScaledVector) -> Result<i64> {
    dot_slices(&u.coords, &v.coords)
}

pub(crate) fn dot_slices(u: &[i64], v: &[i64]) -> Result<i64> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch { left: u.len(), right: v.len() });
    }
    let mut acc: i128 = 0;
    for (&a, &b) in u.iter().zip(v) {
        acc += a as i128 * b as i128;
    }
    i64::try_from(acc).map_err(|_| Error::Overflow)
}

/// `d · dot² == n_u · n_v`, the integer form of `|⟨û, v̂⟩| = 1/√d`.
pub(crate) fn unbiased_identity(d: usize, dot: i64, n_u: i64, n_v: i64) -> Result<bool> {
    let lhs = (d as i128)
        .checked_mul(dot as i128 * dot as i128)
        .ok_or(Error::Overflow)?;
    let rhs = (n_u as i128).checked_mul(n_v as i128).ok_or(Error::Overflow)?;
    Ok(lhs == rhs)
}

/// `d` columns of length `d` sharing one scale.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ScaledBasis {
    dim: usize,
    scale_sq: i64,
    columns: Vec<ScaledVector>,
}

impl ScaledBasis {
    /// Checks shape only; orthonormality is a separate predicate so that
    /// invalid inputs can be loaded and diagnosed.
    pub fn new(scale_sq: i64, columns: Vec<Vec<i64>>) -> Result<Self> {
        let dim = columns.len();
        if dim == 0 {
            return Err(Error::Malformed("basis must have at least one column".into()));
        }
        let columns = columns
            .into_iter()
            .map(|c| {
                if c.len() != dim {
                    return Err(Error::Malformed(format!(
                        "basis of {dim} columns has a column of length {}",
                        c.len()
                    )));
                }
                ScaledVector::new(c, scale_sq)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { dim, scale_sq, columns })
    }

    pub fn identity(dim: usize) -> Self {
        let columns = (0..dim)
            .map(|i| {
                let mut c = vec![0; dim];
                c[i] = 1;
                c
            })
            .collect();
        Self::new(1, columns).expect("identity is well formed")
    }

    /// Columns of a ±1 matrix, scaled by `1/√order`.
    pub fn from_sign_columns(m: &SignMatrix) -> Self {
        let n = m.order();
        let columns = (0..n)
            .map(|j| (0..n).map(|i| m.get(i, j) as i64).collect())
            .collect();
        Self::new(n as i64, columns).expect("sign matrix columns are well formed")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn scale_sq(&self) -> i64 {
        self.scale_sq
    }

    pub fn columns(&self) -> &[ScaledVector] {
        &self.columns
    }

    pub fn column(&self, j: usize) -> &ScaledVector {
        &self.columns[j]
    }

    /// Entry at row `i` of column `j`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.columns[j].coords[i]
    }

    pub fn rescaled(&self, t: i64) -> Result<Self> {
        let columns = self
            .columns
            .iter()
            .map(|c| c.rescaled(t))
            .collect::<Result<Vec<_>>>()?;
        let scale_sq = columns.first().map(|c| c.scale_sq).unwrap_or(self.scale_sq);
        Ok(Self { dim: self.dim, scale_sq, columns })
    }

    /// First column pair `(i, j)` (with `i <= j`) violating `MᵗM = n·I`.
    pub fn orthonormality_violation(&self) -> Option<(usize, usize)> {
        for i in 0..self.dim {
            for j in i..self.dim {
                let expected = if i == j { self.scale_sq } else { 0 };
                match dot(&self.columns[i], &self.columns[j]) {
                    Ok(v) if v == expected => {}
                    _ => return Some((i, j)),
                }
            }
        }
        None
    }
}

/// `MᵗM == scale_sq · I` over the integers.
pub fn is_orthonormal(b: &ScaledBasis) -> bool {
    b.orthonormality_violation().is_none()
}

/// First column pair `(i, j)` with `d·(bᵢ·cⱼ)² ≠ n_B·n_C`, or `None` when the
/// bases are unbiased.
pub fn unbiased_violation(b: &ScaledBasis, c: &ScaledBasis) -> Result<Option<(usize, usize)>> {
    if b.dim != c.dim {
        return Err(Error::DimensionMismatch { left: b.dim, right: c.dim });
    }
    for (i, u) in b.columns.iter().enumerate() {
        for (j, v) in c.columns.iter().enumerate() {
            let p = dot(u, v)?;
            if !unbiased_identity(b.dim, p, b.scale_sq, c.scale_sq)? {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// Every cross pair of columns satisfies `d·(b·c)² = n_B·n_C`.
pub fn is_unbiased_pair(b: &ScaledBasis, c: &ScaledBasis) -> Result<bool> {
    Ok(unbiased_violation(b, c)?.is_none())
}

/// Square ±1 matrix stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignMatrix {
    order: usize,
    entries: Vec<i8>,
}

impl SignMatrix {
    pub fn new(order: usize, entries: Vec<i8>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Malformed("matrix order must be positive".into()));
        }
        if entries.len() != order * order {
            return Err(Error::Malformed(format!(
                "order {order} needs {} entries, got {}",
                order * order,
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|&&e| e != 1 && e != -1) {
            return Err(Error::Malformed(format!("entry {bad} is not ±1")));
        }
        Ok(Self { order, entries })
    }

    pub fn from_rows(rows: &[Vec<i8>]) -> Result<Self> {
        let order = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != order) {
            return Err(Error::Malformed(format!(
                "row of length {} in a matrix with {order} rows",
                r.len()
            )));
        }
        Self::new(order, rows.concat())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i8]> {
        self.entries.chunks(self.order)
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let n = self.order;
        let entries = (0..n * n).map(|k| self.get(k % n, k / n)).collect();
        Self { order: n, entries }
    }

    /// Multiplies every row whose first entry is -1 by -1.
    pub fn with_positive_first_column(&self) -> Self {
        let mut entries = self.entries.clone();
        for row in entries.chunks_mut(self.order) {
            if row[0] < 0 {
                row.iter_mut().for_each(|e| *e = -*e);
            }
        }
        Self { order: self.order, entries }
    }
}

/// A vector in {−1, +1}^d.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn new(entries: Vec<i8>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Malformed("sign vector must be non-empty".into()));
        }
        if let Some(bad) = entries.iter().find(|&&e| e != 1 && e != -1) {
            return Err(Error::Malformed(format!("entry {bad} is not ±1")));
        }
        Ok(Self(entries))
    }

    pub fn ones(d: usize) -> Self {
        Self(vec![1; d])
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dot(&self, other: &Self) -> Result<i64> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        Ok(self.0.iter().zip(&other.0).map(|(&a, &b)| (a * b) as i64).sum())
    }

    /// The representative of the same line whose first coordinate is +1.
    pub fn normalized(&self) -> Self {
        if self.0[0] < 0 {
            Self(self.0.iter().map(|e| -e).collect())
        } else {
            self.clone()
        }
    }

    pub fn to_scaled(&self) -> ScaledVector {
        let coords = self.0.iter().map(|&e| e as i64).collect();
        ScaledVector::new(coords, self.len() as i64).expect("non-empty sign vector")
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &e in &self.0 {
            f.write_str(if e > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl FromStr for SignVector {
    type Err = Error;

    /// Accepts `+` and either `-` or the Unicode minus `−`.
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .trim()
            .chars()
            .map(|ch| match ch {
                '+' => Ok(1),
                '-' | '−' => Ok(-1),
                other => Err(Error::Malformed(format!("unexpected character {other:?} in sign string"))),
            })
            .collect::<Result<Vec<i8>>>()?;
        Self::new(entries)
    }
}
