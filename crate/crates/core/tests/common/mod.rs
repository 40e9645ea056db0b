//! Helpers shared by the exhaustive test targets.
#![allow(dead_code)]

use hsd_codes::codes::{GroupAlgebra, ZeroSet};
use hsd_codes::group::{enumerate_groups, GroupShape};

pub fn groups_of_odd_order(max: u64) -> Vec<GroupShape> {
    (1..=max)
        .step_by(2)
        .flat_map(|n| enumerate_groups(n).unwrap())
        .collect()
}

pub fn orbit_unions(alg: &GroupAlgebra) -> Vec<ZeroSet> {
    let orbits = alg.orbits();
    (0u64..1 << orbits.len())
        .map(|mask| {
            ZeroSet::new(
                (0..orbits.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .flat_map(|i| orbits.orbit(i).iter().copied()),
            )
        })
        .collect()
}

/// Every `(Z, X0, X1)` built from orbits with `tau_s` swapping `X0` and `X1`
/// and fixing `Z`, found by trying all orbit labellings.
pub fn all_splittings(alg: &GroupAlgebra, s: i64) -> Vec<(ZeroSet, ZeroSet, ZeroSet)> {
    let orbits = alg.orbits();
    let tau = alg.group().tau_table(s);
    let image = |set: &ZeroSet| ZeroSet::new(set.as_slice().iter().map(|&x| tau[x]));
    let k = orbits.len() as u32;
    let mut out = Vec::new();
    for code in 0..3u64.pow(k) {
        let mut parts = [Vec::new(), Vec::new(), Vec::new()];
        let mut c = code;
        for i in 0..orbits.len() {
            parts[(c % 3) as usize].extend_from_slice(orbits.orbit(i));
            c /= 3;
        }
        let [z, x0, x1] = parts.map(ZeroSet::new);
        if image(&z) == z && image(&x0) == x1 && image(&x1) == x0 {
            out.push((z, x0, x1));
        }
    }
    out
}
