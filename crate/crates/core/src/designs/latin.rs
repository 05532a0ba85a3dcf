use super::FiniteField;
use crate::error::{Error, Result};

/// An `s × s` array over symbols `0..s` with each symbol once per row and column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatinSquare {
    order: usize,
    grid: Vec<u32>,
}

impl LatinSquare {
    pub fn new(order: usize, grid: Vec<u32>) -> Result<Self> {
        if order == 0 || grid.len() != order * order {
            return Err(Error::Malformed(format!(
                "latin square of order {order} needs {} cells, got {}",
                order * order,
                grid.len()
            )));
        }
        for line in 0..order {
            let mut row_seen = vec![false; order];
            let mut col_seen = vec![false; order];
            for k in 0..order {
                for (cell, seen) in [(grid[line * order + k], &mut row_seen), (grid[k * order + line], &mut col_seen)] {
                    let c = cell as usize;
                    if c >= order || std::mem::replace(&mut seen[c], true) {
                        return Err(Error::Malformed(format!("symbol {cell} repeats or is out of range in line {line}")));
                    }
                }
            }
        }
        Ok(Self { order, grid })
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        Self::new(rows.len(), rows.concat())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, x: usize, y: usize) -> u32 {
        self.grid[x * self.order + y]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.grid.chunks(self.order)
    }
}

/// Superposing the squares yields every ordered pair of symbols exactly once.
pub fn are_orthogonal(a: &LatinSquare, b: &LatinSquare) -> Result<bool> {
    if a.order != b.order {
        return Err(Error::DimensionMismatch { left: a.order, right: b.order });
    }
    let s = a.order;
    let mut seen = vec![false; s * s];
    for (&x, &y) in a.grid.iter().zip(&b.grid) {
        if std::mem::replace(&mut seen[x as usize * s + y as usize], true) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The `q − 1` squares `L_a(x, y) = a·x + y` over GF(q), `a ≠ 0`, in
/// increasing order of the encoding of `a`.
pub fn gf_mols(q: u64) -> Result<Vec<LatinSquare>> {
    if q < 2 {
        return Err(Error::Infeasible(format!("MOLS order must be at least 2, got {q}")));
    }
    let field = FiniteField::of_order(q)?;
    let n = q as u32;
    (1..n)
        .map(|a| {
            let grid = (0..n)
                .flat_map(|x| (0..n).map(move |y| (x, y)))
                .map(|(x, y)| field.add(field.mul(a, x), y))
                .collect();
            LatinSquare::new(q as usize, grid)
        })
        .collect()
}
