use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::{kron, paley, sylvester, HadamardMatrix};
use crate::arith::is_prime;
use crate::error::{Error, Result};

/// Orders up to this bound are precomputed when the catalog is built.
pub const CATALOG_LIMIT: usize = 256;

/// How to build a Hadamard matrix of a given order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Recipe {
    Sylvester(u32),
    Paley(u64),
    Kron(Box<Recipe>, Box<Recipe>),
}

impl Recipe {
    pub fn order(&self) -> usize {
        match self {
            Recipe::Sylvester(i) => 1 << i,
            Recipe::Paley(q) if q % 4 == 3 => *q as usize + 1,
            Recipe::Paley(q) => 2 * (*q as usize + 1),
            Recipe::Kron(a, b) => a.order() * b.order(),
        }
    }

    pub fn build(&self) -> Result<HadamardMatrix> {
        match self {
            Recipe::Sylvester(i) => sylvester(*i),
            Recipe::Paley(q) => paley(*q),
            Recipe::Kron(a, b) => kron(&a.build()?, &b.build()?),
        }
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Sylvester(i) => write!(f, "sylvester({i})"),
            Recipe::Paley(q) => write!(f, "paley({q})"),
            Recipe::Kron(a, b) => write!(f, "kron({a},{b})"),
        }
    }
}

impl FromStr for Recipe {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = RecipeParser { src: s.as_bytes(), pos: 0 };
        let r = p.recipe()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(Error::Malformed(format!("trailing input in recipe {s:?}")));
        }
        Ok(r)
    }
}

struct RecipeParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl RecipeParser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, ch: u8) -> Result<()> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&ch) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Malformed(format!("expected '{}' at offset {} in recipe", ch as char, self.pos)))
        }
    }

    fn ident(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_alphabetic) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap_or_default()
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Malformed(format!("expected a number at offset {start} in recipe")))
    }

    fn recipe(&mut self) -> Result<Recipe> {
        let name = self.ident().to_owned();
        self.expect(b'(')?;
        let r = match name.as_str() {
            "sylvester" => {
                let i = self.number()?;
                Recipe::Sylvester(u32::try_from(i).map_err(|_| Error::Malformed("sylvester exponent too large".into()))?)
            }
            "paley" => Recipe::Paley(self.number()?),
            "kron" => {
                let a = self.recipe()?;
                self.expect(b',')?;
                let b = self.recipe()?;
                Recipe::Kron(Box::new(a), Box::new(b))
            }
            other => return Err(Error::Malformed(format!("unknown recipe {other:?}"))),
        };
        self.expect(b')')?;
        Ok(r)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Status {
    Constructive(Recipe),
    /// No Hadamard matrix of this order exists (order ∉ {1, 2} and 4 ∤ order).
    Impossible,
    /// Divisible by 4 but outside the Sylvester/Paley/Kronecker closure.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HadamardStatus {
    pub order: usize,
    pub status: Status,
}

impl HadamardStatus {
    pub fn is_constructive(&self) -> bool {
        matches!(self.status, Status::Constructive(_))
    }

    pub fn recipe(&self) -> Option<&Recipe> {
        match &self.status {
            Status::Constructive(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_unknown(&self) -> bool {
        self.status == Status::Unknown
    }
}

fn order_is_admissible(n: usize) -> bool {
    n == 1 || n == 2 || n.is_multiple_of(4)
}

fn find_recipe(n: usize, memo: &mut HashMap<usize, Option<Recipe>>) -> Option<Recipe> {
    if let Some(r) = memo.get(&n) {
        return r.clone();
    }
    let r = if n == 0 || !order_is_admissible(n) {
        None
    } else if n.is_power_of_two() {
        Some(Recipe::Sylvester(n.trailing_zeros()))
    } else if is_prime(n as u64 - 1) && (n - 1) % 4 == 3 {
        Some(Recipe::Paley(n as u64 - 1))
    } else if n.is_multiple_of(2) && n / 2 >= 2 && is_prime((n / 2 - 1) as u64) && (n / 2 - 1) % 4 == 1 {
        Some(Recipe::Paley((n / 2 - 1) as u64))
    } else {
        let mut found = None;
        let mut a = 2;
        while a * a <= n {
            if n.is_multiple_of(a) {
                if let (Some(ra), Some(rb)) = (find_recipe(a, memo), find_recipe(n / a, memo)) {
                    found = Some(Recipe::Kron(Box::new(ra), Box::new(rb)));
                    break;
                }
            }
            a += 1;
        }
        found
    };
    memo.insert(n, r.clone());
    r
}

fn compute_status(order: usize, memo: &mut HashMap<usize, Option<Recipe>>) -> HadamardStatus {
    let status = if !order_is_admissible(order) {
        Status::Impossible
    } else {
        match find_recipe(order, memo) {
            Some(r) => Status::Constructive(r),
            None => Status::Unknown,
        }
    };
    HadamardStatus { order, status }
}

/// Serialized form of one catalog row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recipe: Option<String>,
}

impl From<&HadamardStatus> for CatalogEntry {
    fn from(s: &HadamardStatus) -> Self {
        match &s.status {
            Status::Constructive(r) => Self { status: "constructive".into(), recipe: Some(r.to_string()) },
            Status::Impossible => Self { status: "impossible".into(), recipe: None },
            Status::Unknown => Self { status: "unknown".into(), recipe: None },
        }
    }
}

/// Precomputed statuses for orders `1..=CATALOG_LIMIT`; larger orders are
/// resolved on demand with the same rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HadamardCatalog {
    entries: Vec<HadamardStatus>,
}

impl HadamardCatalog {
    pub fn build() -> Self {
        let mut memo = HashMap::new();
        let entries = (1..=CATALOG_LIMIT).map(|n| compute_status(n, &mut memo)).collect();
        Self { entries }
    }

    pub fn status(&self, order: usize) -> HadamardStatus {
        match order {
            1..=CATALOG_LIMIT => self.entries[order - 1].clone(),
            _ => compute_status(order, &mut HashMap::new()),
        }
    }

    pub fn entries(&self) -> &[HadamardStatus] {
        &self.entries
    }

    /// Order → entry, keyed by the decimal order.
    pub fn to_entries(&self) -> BTreeMap<usize, CatalogEntry> {
        self.entries.iter().map(|s| (s.order, CatalogEntry::from(s))).collect()
    }

    /// Rebuilds a catalog from its serialized rows, rejecting any row that
    /// disagrees with the order it is filed under or with the admissibility rule.
    pub fn from_entries(rows: &BTreeMap<usize, CatalogEntry>) -> Result<Self> {
        let mut entries = Vec::with_capacity(CATALOG_LIMIT);
        for order in 1..=CATALOG_LIMIT {
            let row = rows
                .get(&order)
                .ok_or_else(|| Error::Malformed(format!("catalog is missing order {order}")))?;
            let status = match (row.status.as_str(), &row.recipe) {
                ("constructive", Some(r)) => {
                    let recipe: Recipe = r.parse()?;
                    if recipe.order() != order {
                        return Err(Error::Malformed(format!(
                            "catalog recipe {r} has order {}, filed under {order}",
                            recipe.order()
                        )));
                    }
                    Status::Constructive(recipe)
                }
                ("impossible", None) => Status::Impossible,
                ("unknown", None) => Status::Unknown,
                _ => return Err(Error::Malformed(format!("bad catalog row for order {order}"))),
            };
            if (status == Status::Impossible) == order_is_admissible(order) {
                return Err(Error::Malformed(format!("catalog admissibility wrong for order {order}")));
            }
            entries.push(HadamardStatus { order, status });
        }
        Ok(Self { entries })
    }
}

/// The process-wide catalog, built on first use.
pub fn catalog() -> &'static HadamardCatalog {
    static CATALOG: OnceLock<HadamardCatalog> = OnceLock::new();
    CATALOG.get_or_init(HadamardCatalog::build)
}

pub fn hadamard_status(order: usize) -> HadamardStatus {
    catalog().status(order)
}

/// Builds a Hadamard matrix of the given order from the catalog recipe.
pub fn construct(order: usize) -> Result<HadamardMatrix> {
    let status = hadamard_status(order);
    match status.status {
        Status::Constructive(r) => r.build(),
        Status::Impossible => Err(Error::Infeasible(format!(
            "order must be 1, 2, or ≡ 0 mod 4 (got {order})"
        ))),
        Status::Unknown => Err(Error::Unsupported(format!(
            "no Sylvester/Paley/Kronecker construction for order {order}"
        ))),
    }
}
