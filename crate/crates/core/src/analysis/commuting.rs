use crate::constructions::{canonical_form, MubSet};
use crate::error::{Error, Result};

/// Dense square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn new(n: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::Malformed(format!("{n}×{n} matrix needs {} entries", n * n)));
        }
        Ok(Self { n, entries })
    }

    pub fn scalar(n: usize, value: i64) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = value;
        }
        Self { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    fn mul(&self, other: &Self) -> Option<Vec<i128>> {
        if self.n != other.n {
            return None;
        }
        let n = self.n;
        let mut out = vec![0i128; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k) as i128;
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * other.get(k, j) as i128;
                }
            }
        }
        Some(out)
    }

    /// `tr(AᵗB)` on the integer numerators.
    pub fn trace_inner(&self, other: &Self) -> i128 {
        self.entries.iter().zip(&other.entries).map(|(&a, &b)| a as i128 * b as i128).sum()
    }

    pub fn trace(&self) -> i128 {
        (0..self.n).map(|i| self.get(i, i) as i128).sum()
    }
}

/// `m` classes of `d` real symmetric matrices `U = numerator / denom`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutingClassSet {
    pub d: usize,
    pub denom: i64,
    pub classes: Vec<Vec<IntMatrix>>,
}

impl CommutingClassSet {
    pub fn identity(&self) -> IntMatrix {
        IntMatrix::scalar(self.d, self.denom)
    }

    /// First condition that fails, as a human-readable reason.
    pub fn violation(&self) -> Option<String> {
        let d = self.d;
        let denom_sq = self.denom as i128 * self.denom as i128;
        if self.denom <= 0 {
            return Some("denominator must be positive".into());
        }
        for (j, class) in self.classes.iter().enumerate() {
            if class.len() != d {
                return Some(format!("class {j} has {} matrices, expected {d}", class.len()));
            }
            for (t, u) in class.iter().enumerate() {
                if u.order() != d {
                    return Some(format!("class {j} matrix {t} has order {}", u.order()));
                }
                if !u.is_symmetric() {
                    return Some(format!("class {j} matrix {t} is not symmetric"));
                }
                let sq = u.mul(u).expect("orders agree");
                let unitary = (0..d * d).all(|k| sq[k] == if k / d == k % d { denom_sq } else { 0 });
                if !unitary {
                    return Some(format!("class {j} matrix {t} is not orthogonal (U² ≠ I)"));
                }
            }
            for a in 0..d {
                for b in a + 1..d {
                    if class[a].mul(&class[b]) != class[b].mul(&class[a]) {
                        return Some(format!("class {j}: matrices {a} and {b} do not commute"));
                    }
                }
            }
        }
        let id = self.identity();
        for a in 0..self.classes.len() {
            for b in a + 1..self.classes.len() {
                let common: Vec<&IntMatrix> =
                    self.classes[a].iter().filter(|u| self.classes[b].contains(u)).collect();
                if common.len() != 1 || common[0] != &id {
                    return Some(format!("classes {a} and {b} share {} matrices, expected only the identity", common.len()));
                }
            }
        }
        let mut distinct: Vec<(usize, usize, &IntMatrix)> = Vec::new();
        for (j, class) in self.classes.iter().enumerate() {
            for (t, u) in class.iter().enumerate() {
                if !distinct.iter().any(|(_, _, v)| *v == u) {
                    distinct.push((j, t, u));
                }
            }
        }
        for x in 0..distinct.len() {
            for y in x + 1..distinct.len() {
                let (ja, ta, a) = distinct[x];
                let (jb, tb, b) = distinct[y];
                if a.trace_inner(b) != 0 {
                    return Some(format!("U[{ja}][{ta}] and U[{jb}][{tb}] are not trace-orthogonal"));
                }
            }
        }
        None
    }
}

/// All four class conditions, checked exactly: commuting within a class,
/// only the identity shared between classes, pairwise trace orthogonality,
/// real symmetry (plus `U² = I`).
pub fn verify_commuting_classes(cc: &CommutingClassSet) -> bool {
    cc.violation().is_none()
}

/// After canonicalising, builds `U_{j,t} = Σ_k e_{t,k} ψ_k^j (ψ_k^j)ᵗ` where
/// the eigenvalue table `e` is the transpose of `√d · B₁ᵗB₂`, whose first row
/// is all ones once the second basis has an all-positive first column.
pub fn commuting_classes(ms: &MubSet) -> Result<CommutingClassSet> {
    if ms.len() < 2 {
        return Err(Error::Infeasible(format!("commuting classes need at least 2 bases, got {}", ms.len())));
    }
    if let Some(v) = ms.violation() {
        return Err(Error::Infeasible(format!("input is not a MUB set: {v}")));
    }
    let cf = canonical_form(ms)?;
    let d = cf.dim();
    let second = &cf.bases()[1];
    if second.scale_sq() != d as i64 {
        return Err(Error::Verification("canonical second basis is not a scaled ±1 matrix".into()));
    }
    // eigen[t][k] = (column t of B₂)[k]
    let eigen: Vec<Vec<i64>> = second.columns().iter().map(|c| c.coords().to_vec()).collect();
    debug_assert!(eigen[0].iter().all(|&e| e == 1));

    let denom = cf.bases().iter().fold(1i64, |acc, b| lcm(acc, b.scale_sq()));
    let classes = cf
        .bases()
        .iter()
        .map(|basis| {
            let factor = denom / basis.scale_sq();
            eigen
                .iter()
                .map(|row| {
                    let mut entries = vec![0i64; d * d];
                    for (k, psi) in basis.columns().iter().enumerate() {
                        let w = row[k] * factor;
                        let c = psi.coords();
                        for a in 0..d {
                            if c[a] == 0 {
                                continue;
                            }
                            for b in 0..d {
                                entries[a * d + b] += w * c[a] * c[b];
                            }
                        }
                    }
                    IntMatrix::new(d, entries)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CommutingClassSet { d, denom, classes })
}

fn lcm(a: i64, b: i64) -> i64 {
    a / crate::arith::gcd(a, b) * b
}
