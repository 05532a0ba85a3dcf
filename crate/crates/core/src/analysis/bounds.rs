use serde::Serialize;

use super::{classify, DimensionClass};
use crate::arith::{factorize, prime_power};
use crate::error::{Error, Result};
use crate::hadamard::{catalog, HadamardCatalog, Status};

/// A bound value with the argument it rests on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: u64,
    pub note: String,
}

impl Bound {
    fn new(value: u64, note: impl Into<String>) -> Self {
        Self { value, note: note.into() }
    }
}

/// Lower and upper bounds on the number of real MUBs in dimension `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub d: u64,
    pub class: DimensionClass,
    pub lower: Bound,
    pub upper: Bound,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<u64>,
    pub notes: Vec<String>,
    /// Hadamard orders whose status is Unknown and that a stronger bound would need.
    pub caveats: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BoundOptions {
    /// Treat every order divisible by 4 as admitting a Hadamard matrix.
    pub assume_hadamard_conjecture: bool,
}

/// `MOLS(m)` lower bound: `m − 1` for prime powers, otherwise the MacNeish
/// bound `min (qᵢ − 1)` over the prime-power factors `qᵢ` of `m`.
pub fn mols_lower_bound(m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::Infeasible(format!("MOLS order must be at least 2, got {m}")));
    }
    if prime_power(m).is_some() {
        return Ok(m - 1);
    }
    Ok(factorize(m).iter().map(|&(p, e)| p.pow(e) - 1).min().expect("m >= 2 has a factor"))
}

/// `m(d − 1) + 1 ≤ d(d + 1)/2`: `m` classes of `d − 1` traceless symmetric
/// matrices plus the identity fit in the space of symmetric matrices.
pub fn counting_bound_check(m: u64, d: u64) -> bool {
    let lhs = m as u128 * (d as u128 - 1) + 1;
    let rhs = d as u128 * (d as u128 + 1) / 2;
    lhs <= rhs
}

/// Existence of a Hadamard matrix of one order, as far as the catalog knows.
enum Hm {
    Yes(String),
    No,
    Unknown,
}

struct Ctx<'a> {
    catalog: &'a HadamardCatalog,
    opts: BoundOptions,
    notes: Vec<String>,
    caveats: Vec<String>,
}

impl Ctx<'_> {
    fn hm(&mut self, order: u64) -> Hm {
        match self.catalog.status(order as usize).status {
            Status::Constructive(r) => Hm::Yes(format!("HM({order}) via {r}")),
            Status::Impossible => Hm::No,
            Status::Unknown if self.opts.assume_hadamard_conjecture => {
                self.notes.push(format!("HM({order}) assumed to exist (Hadamard conjecture)"));
                Hm::Yes(format!("HM({order}) assumed"))
            }
            Status::Unknown => {
                self.caveats.push(format!("Hadamard({order}) status Unknown"));
                Hm::Unknown
            }
        }
    }
}

/// [`bounds_with`] against the process-wide catalog with default options.
pub fn bounds(d: u64) -> Result<BoundReport> {
    bounds_with(d, catalog(), BoundOptions::default())
}

pub fn bounds_with(d: u64, catalog: &HadamardCatalog, opts: BoundOptions) -> Result<BoundReport> {
    if d < 2 {
        return Err(Error::Infeasible(format!("bounds need d >= 2, got {d}")));
    }
    let class = classify(d);
    let half_plus_one = d / 2 + 1;
    let mut ctx = Ctx { catalog, opts, notes: Vec::new(), caveats: Vec::new() };
    let (lower, upper) = match class {
        DimensionClass::NotDivisibleBy4 if d == 2 => {
            ctx.notes.push("d = 2 admits the order-2 Hadamard matrix, so the 4∤d row does not apply".into());
            (
                Bound::new(2, "standard basis and H₂/√2"),
                Bound::new(2, "d/2 + 1 counting bound"),
            )
        }
        DimensionClass::NotDivisibleBy4 => (
            Bound::new(1, "standard basis"),
            Bound::new(1, "no 3 pairwise orthogonal ±1 vectors unless 4 | d, so no Hadamard matrix of order d"),
        ),
        DimensionClass::Div4NonSquare { .. } => {
            let upper = Bound::new(2, "third basis would need |Σ sᵢ| = √d, irrational for non-square d");
            let lower = match ctx.hm(d) {
                Hm::Yes(how) => Bound::new(2, format!("standard basis and H/√d, {how}")),
                _ => Bound::new(1, "standard basis"),
            };
            (lower, upper)
        }
        DimensionClass::FourOddSquare { s } => {
            ctx.notes.push(format!(
                "latin lower bound not applicable: needs HM({}), and 2s ≡ 2 mod 4 admits none",
                2 * s
            ));
            let upper = Bound::new(3, "at most 2 mutually unbiased lattice lines for d = 4s², s odd");
            let lower = match ctx.hm(d) {
                Hm::Yes(how) => Bound::new(2, format!("standard basis and H/√d, {how}")),
                _ => Bound::new(1, "standard basis"),
            };
            (lower, upper)
        }
        DimensionClass::FourPowerOddSquare { i, s } => {
            let upper = Bound::new(half_plus_one, "d/2 + 1 counting bound");
            let mut lower = Bound::new(1, "standard basis");
            if let Hm::Yes(how) = ctx.hm(d) {
                lower = Bound::new(2, format!("standard basis and H/√d, {how}"));
            }
            let root = (1u64 << i) * s;
            if let Hm::Yes(how) = ctx.hm(root) {
                let mols = mols_lower_bound(root)?;
                let kind = if prime_power(root).is_some() { "prime power" } else { "MacNeish" };
                if mols + 2 > lower.value {
                    lower = Bound::new(
                        mols + 2,
                        format!("latin MUBs: MOLS({root}) + 2 with MOLS({root}) >= {mols} (lower bound via {kind}), {how}"),
                    );
                }
            }
            (lower, upper)
        }
        DimensionClass::PowerOfFour { i } => {
            ctx.notes.push(format!(
                "equality d/2 + 1 rests on a cited construction not reproduced here; \
                 the largest in-crate witness is 2^i + 1 = {} latin MUBs",
                (1u64 << i) + 1
            ));
            (
                Bound::new(half_plus_one, "cited construction for d = 4^i"),
                Bound::new(half_plus_one, "d/2 + 1 counting bound"),
            )
        }
    };
    debug_assert!(lower.value <= upper.value && upper.value <= half_plus_one);
    let exact = (lower.value == upper.value).then_some(lower.value);
    Ok(BoundReport { d, class, lower, upper, exact, notes: ctx.notes, caveats: ctx.caveats })
}
