use crate::error::{Error, Result};

/// Monic irreducible moduli, lowest coefficient first.
const MODULI: &[(u64, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),    // x² + x + 1
    (2, 3, &[1, 1, 0, 1]), // x³ + x + 1
    (3, 2, &[1, 0, 1]),    // x² + 1
    (2, 4, &[1, 1, 0, 0, 1]), // x⁴ + x + 1
    (5, 2, &[2, 0, 1]),    // x² + 2
    (3, 3, &[1, 2, 0, 1]), // x³ + 2x + 1
];

/// GF(p^e) with elements encoded as integers `0..q` whose base-`p` digits
/// are the polynomial coefficients (lowest degree first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    e: u32,
    modulus: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
}

fn poly_rem(mut a: Vec<u32>, m: &[u32], p: u32) -> Vec<u32> {
    let dm = m.len() - 1;
    let lead_inv = inverse_mod(m[dm], p);
    while a.len() > dm {
        let top = *a.last().unwrap();
        if top != 0 {
            let f = top * lead_inv % p;
            let shift = a.len() - 1 - dm;
            for (i, &c) in m.iter().enumerate() {
                a[i + shift] = (a[i + shift] + p - f * c % p) % p;
            }
        }
        a.pop();
    }
    a
}

fn inverse_mod(a: u32, p: u32) -> u32 {
    (1..p).find(|&x| a * x % p == 1).expect("nonzero residue mod a prime")
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(m: &[u32], p: u32) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as usize).pow(d as u32);
        for code in 0..count {
            let mut divisor: Vec<u32> = (0..d).map(|i| (code / (p as usize).pow(i as u32) % p as usize) as u32).collect();
            divisor.push(1);
            if poly_rem(m.to_vec(), &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// Largest supported extension degree.
    pub const MAX_DEGREE: u32 = 4;

    pub fn new(p: u64, e: u32) -> Result<Self> {
        if !crate::arith::is_prime(p) {
            return Err(Error::Malformed(format!("field characteristic {p} is not prime")));
        }
        if e == 0 || e > Self::MAX_DEGREE {
            return Err(Error::Unsupported(format!("extension degree {e} (supported: 1..={})", Self::MAX_DEGREE)));
        }
        let q = p.checked_pow(e).filter(|&q| q <= 1 << 16).ok_or(Error::SizeLimit {
            what: "field order",
            value: p.saturating_pow(e),
            max: 1 << 16,
        })?;
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            MODULI
                .iter()
                .find(|(mp, me, _)| *mp == p && *me == e)
                .map(|(_, _, m)| m.to_vec())
                .ok_or_else(|| Error::Unsupported(format!("no modulus tabulated for GF({p}^{e})")))?
        };
        let pp = p as u32;
        if !is_irreducible(&modulus, pp) {
            return Err(Error::Verification(format!("modulus for GF({p}^{e}) is reducible")));
        }
        let q = q as usize;
        let digits = |x: usize| -> Vec<u32> { (0..e).map(|i| (x / (p as usize).pow(i) % p as usize) as u32).collect() };
        let encode = |c: &[u32]| -> u32 { c.iter().rev().fold(0u32, |acc, &d| acc * pp + d) };
        let mut add = vec![0u32; q * q];
        let mut mul = vec![0u32; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % pp).collect();
                add[a * q + b] = encode(&sum);
                let mut prod = vec![0u32; 2 * e as usize - 1];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % pp;
                    }
                }
                let mut rem = poly_rem(prod, &modulus, pp);
                rem.resize(e as usize, 0);
                mul[a * q + b] = encode(&rem);
            }
        }
        let field = Self { p, e, modulus, add, mul };
        for a in 1..q as u32 {
            if field.inv(a).is_none() {
                return Err(Error::Verification(format!("element {a} of GF({q}) has no inverse")));
            }
        }
        Ok(field)
    }

    /// GF(q) for a prime power `q`.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, e) = crate::arith::prime_power(q)
            .ok_or_else(|| Error::Infeasible(format!("{q} is not a prime power")))?;
        Self::new(p, e)
    }

    pub fn order(&self) -> usize {
        self.p.pow(self.e) as usize
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.order() + b as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.order() + b as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        (0..self.order() as u32).find(|&b| self.mul(a, b) == 1)
    }
}
