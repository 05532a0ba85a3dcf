//! Shared inputs for the benchmarks.

use rmub::designs::{gf_mols, net_from_mols};
use rmub::{latin_mubs, sylvester, MubSet};

/// Latin MUBs in dimension `4^i` from the full net over `GF(2^i)`.
pub fn latin_power_of_four(i: u32) -> MubSet {
    let s = 1u64 << i;
    let net = net_from_mols(&gf_mols(s).expect("prime power"), s as usize).expect("valid net");
    latin_mubs(&net, &sylvester(i).expect("small order")).expect("valid construction")
}
