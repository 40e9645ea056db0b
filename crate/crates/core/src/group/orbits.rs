use super::{GroupElement, GroupShape};
use crate::arith;
use crate::error::{Error, Result};

/// The orbits of `<tau_s>` on a group, as sorted lists of element indices.
///
/// Orbits are ordered by their smallest element (the representative), and
/// element indices follow the lexicographic order of residue tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    multiplier: u64,
    orbits: Vec<Vec<usize>>,
    orbit_of: Vec<usize>,
}

/// Partitions `g` into `<tau_s>`-orbits; `s` must be a unit modulo the exponent.
pub fn orbit_partition(g: &GroupShape, s: i64) -> Result<OrbitPartition> {
    let m = g.exponent();
    if !g.is_unit(s) {
        return Err(Error::NotAUnit { s, modulus: m });
    }
    let tau = g.tau_table(s);
    let n = g.len();
    let mut orbit_of = vec![usize::MAX; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut orbit = Vec::new();
        let mut x = start;
        while orbit_of[x] == usize::MAX {
            orbit_of[x] = id;
            orbit.push(x);
            x = tau[x];
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    Ok(OrbitPartition {
        multiplier: arith::rem_euclid(s, m),
        orbits,
        orbit_of,
    })
}

impl OrbitPartition {
    /// The multiplier reduced modulo the group exponent.
    pub fn multiplier(&self) -> u64 {
        self.multiplier
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn orbit(&self, id: usize) -> &[usize] {
        &self.orbits[id]
    }

    pub fn orbit_of(&self, idx: usize) -> usize {
        self.orbit_of[idx]
    }

    pub fn representative(&self, id: usize) -> usize {
        self.orbits[id][0]
    }

    pub fn orbit_elements(&self, id: usize, g: &GroupShape) -> Vec<GroupElement> {
        self.orbits[id].iter().map(|&i| g.element(i)).collect()
    }

    /// Whether a set of element indices is a union of orbits.
    pub fn is_union(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.orbit_of.len()];
        for &i in set {
            member[i] = true;
        }
        set.iter()
            .all(|&i| self.orbits[self.orbit_of[i]].iter().all(|&j| member[j]))
    }

    /// The union of the given orbits as a sorted index list.
    pub fn union_of(&self, ids: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut out: Vec<usize> = ids
            .into_iter()
            .flat_map(|id| self.orbits[id].iter().copied())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}
