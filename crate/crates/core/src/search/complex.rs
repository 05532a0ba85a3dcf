use num_complex::{Complex, Complex64};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComplexCertificate {
    /// True when no unit-modulus pair satisfies all three constraints.
    pub exact_refutation: bool,
    /// Unit `a` with `|1+a|² = 2`, as Gaussian integers.
    pub unit_solutions: Vec<(i64, i64)>,
    /// `|a+b|²` over all pairs of `unit_solutions`.
    pub pair_values: Vec<i64>,
    pub grid_steps: usize,
    /// `min` over the phase grid of the largest constraint violation.
    pub min_violation: f64,
    /// Grid indices `(j, k)` attaining `min_violation`.
    pub argmin: (usize, usize),
}

/// Certificate that the three real MUBs in dimension 4 admit no complex
/// extension: a fourth basis would need unit `a`, `b` with
/// `|1+a|² = |1+b|² = |a+b|² = 2`.
///
/// Exact part: `|1+a|² = 2 + 2·Re a`, so `Re a = 0` and `|a| = 1` leave
/// `a = ±i`; the pair condition is then checked over the Gaussian integers.
/// Numeric part: the same violation over a `grid_steps²` phase grid.
pub fn latin_d4_complex_certificate(grid_steps: usize) -> Result<ComplexCertificate> {
    if grid_steps == 0 {
        return Err(Error::Malformed("grid_steps must be positive".into()));
    }
    let one = Complex::new(1i64, 0);
    // Re a = 0, (Im a)² = 1
    let unit_solutions: Vec<Complex<i64>> = [-1i64, 1].iter().map(|&y| Complex::new(0, y)).collect();
    let all_solve = unit_solutions.iter().all(|&a| a.norm_sqr() == 1 && (one + a).norm_sqr() == 2);
    let pair_values: Vec<i64> = unit_solutions
        .iter()
        .flat_map(|&a| unit_solutions.iter().map(move |&b| (a + b).norm_sqr()))
        .collect();
    let exact_refutation = all_solve && pair_values.iter().all(|&v| v != 2);

    let phases: Vec<Complex64> = (0..grid_steps)
        .map(|j| Complex64::from_polar(1.0, std::f64::consts::TAU * j as f64 / grid_steps as f64))
        .collect();
    let violation = |a: Complex64, b: Complex64| {
        let one = Complex64::new(1.0, 0.0);
        [(one + a).norm_sqr(), (one + b).norm_sqr(), (a + b).norm_sqr()]
            .iter()
            .map(|v| (v - 2.0).abs())
            .fold(0.0, f64::max)
    };
    let mut min_violation = f64::INFINITY;
    let mut argmin = (0, 0);
    for (j, &a) in phases.iter().enumerate() {
        for (k, &b) in phases.iter().enumerate() {
            let v = violation(a, b);
            if v < min_violation {
                min_violation = v;
                argmin = (j, k);
            }
        }
    }
    Ok(ComplexCertificate {
        exact_refutation,
        unit_solutions: unit_solutions.iter().map(|z| (z.re, z.im)).collect(),
        pair_values,
        grid_steps,
        min_violation,
        argmin,
    })
}
