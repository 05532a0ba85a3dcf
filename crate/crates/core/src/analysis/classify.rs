use std::fmt;

use serde::Serialize;

use crate::arith::exact_sqrt;

/// The row of the bound table a dimension falls under. For square `d`
/// divisible by 4, `d = 4^i s²` with `s` odd and `i >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DimensionClass {
    NotDivisibleBy4,
    /// `d = 4n` with `n` not a square.
    Div4NonSquare { n: u64 },
    /// `d = 4^i`.
    PowerOfFour { i: u32 },
    /// `d = 4s²`, `s > 1` odd.
    FourOddSquare { s: u64 },
    /// `d = 4^i s²`, `i >= 2`, `s > 1` odd.
    FourPowerOddSquare { i: u32, s: u64 },
}

impl fmt::Display for DimensionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimensionClass::NotDivisibleBy4 => write!(f, "4∤d"),
            DimensionClass::Div4NonSquare { n } => write!(f, "4n, n={n} not square"),
            DimensionClass::PowerOfFour { i } => write!(f, "4^i (i={i})"),
            DimensionClass::FourOddSquare { s } => write!(f, "4s² (s={s})"),
            DimensionClass::FourPowerOddSquare { i, s } => write!(f, "4^i s² (i={i}, s={s})"),
        }
    }
}

pub fn classify(d: u64) -> DimensionClass {
    if !d.is_multiple_of(4) {
        return DimensionClass::NotDivisibleBy4;
    }
    let Some(root) = exact_sqrt(d) else {
        return DimensionClass::Div4NonSquare { n: d / 4 };
    };
    // root = 2^i · s with s odd, i >= 1
    let i = root.trailing_zeros();
    let s = root >> i;
    match (i, s) {
        (_, 1) => DimensionClass::PowerOfFour { i },
        (1, _) => DimensionClass::FourOddSquare { s },
        _ => DimensionClass::FourPowerOddSquare { i, s },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(classify(6), DimensionClass::NotDivisibleBy4);
        assert_eq!(classify(16), DimensionClass::PowerOfFour { i: 2 });
        assert_eq!(classify(576), DimensionClass::FourPowerOddSquare { i: 3, s: 3 });
        assert_eq!(classify(36), DimensionClass::FourOddSquare { s: 3 });
        assert_eq!(classify(12), DimensionClass::Div4NonSquare { n: 3 });
        assert_eq!(classify(4), DimensionClass::PowerOfFour { i: 1 });
        assert_eq!(classify(1), DimensionClass::NotDivisibleBy4);
    }

    #[test]
    fn classes_reconstruct_d() {
        for d in 1..=5000u64 {
            let back = match classify(d) {
                DimensionClass::NotDivisibleBy4 => {
                    assert_ne!(d % 4, 0);
                    continue;
                }
                DimensionClass::Div4NonSquare { n } => {
                    assert!(exact_sqrt(n).is_none());
                    4 * n
                }
                DimensionClass::PowerOfFour { i } => 4u64.pow(i),
                DimensionClass::FourOddSquare { s } => {
                    assert!(s > 1 && s % 2 == 1);
                    4 * s * s
                }
                DimensionClass::FourPowerOddSquare { i, s } => {
                    assert!(i >= 2 && s > 1 && s % 2 == 1);
                    4u64.pow(i) * s * s
                }
            };
            assert_eq!(back, d);
        }
    }
}
