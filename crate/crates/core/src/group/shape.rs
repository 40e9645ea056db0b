use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::arith;
use crate::error::{Error, Result};

/// A finite abelian group `Z_{m1} x ... x Z_{ms}` in invariant-factor form,
/// `m1 | m2 | ... | ms`, every `mi >= 2`. The empty list is the trivial group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupShape {
    factors: Vec<u64>,
}

/// A residue tuple `(x1, ..., xs)` with `0 <= xi < mi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupElement(pub Vec<u64>);

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl GroupShape {
    /// Validates an invariant-factor list.
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if factors.iter().any(|&m| m < 2) {
            return Err(Error::InvalidArgument(
                "invariant factors must be >= 2".into(),
            ));
        }
        if factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(Error::InvalidArgument(format!(
                "{factors:?} is not a divisibility chain"
            )));
        }
        Ok(Self { factors })
    }

    pub fn trivial() -> Self {
        Self {
            factors: Vec::new(),
        }
    }

    pub fn cyclic(m: u64) -> Self {
        Self::from_cyclic_factors(&[m])
    }

    /// Normalizes any product of cyclic groups into invariant-factor form.
    pub fn from_cyclic_factors(cyclic: &[u64]) -> Self {
        let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &c in cyclic.iter().filter(|&&c| c > 1) {
            for (p, k) in arith::factorize(c) {
                by_prime.entry(p).or_default().push(k);
            }
        }
        let parts: Vec<(u64, Vec<u32>)> = by_prime
            .into_iter()
            .map(|(p, mut ks)| {
                ks.sort_unstable_by(|a, b| b.cmp(a));
                (p, ks)
            })
            .collect();
        Self::from_prime_partitions(&parts)
    }

    /// Each prime paired with a non-increasing partition of its exponent.
    fn from_prime_partitions(parts: &[(u64, Vec<u32>)]) -> Self {
        let len = parts.iter().map(|(_, l)| l.len()).max().unwrap_or(0);
        let mut factors: Vec<u64> = (0..len)
            .map(|i| {
                parts
                    .iter()
                    .map(|(p, l)| l.get(i).map_or(1, |&k| p.pow(k)))
                    .product()
            })
            .collect();
        factors.reverse();
        Self { factors }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn len(&self) -> usize {
        self.order() as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    /// Element at lexicographic position `idx` (first coordinate most significant).
    pub fn element(&self, mut idx: usize) -> GroupElement {
        let mut out = vec![0u64; self.rank()];
        for (slot, &m) in out.iter_mut().zip(&self.factors).rev() {
            *slot = idx as u64 % m;
            idx /= m as usize;
        }
        GroupElement(out)
    }

    /// Lexicographic position of an element; components are reduced first.
    pub fn index_of(&self, x: &GroupElement) -> usize {
        assert_eq!(x.0.len(), self.rank(), "element rank mismatch");
        x.0.iter()
            .zip(&self.factors)
            .fold(0usize, |acc, (&xi, &m)| {
                acc * m as usize + (xi % m) as usize
            })
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.len()).map(move |i| self.element(i))
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.factors)
                .map(|((&x, &y), &m)| (x + y) % m)
                .collect(),
        )
    }

    /// Index-level addition table row helper: `idx(a) + idx(b)`.
    pub fn add_idx(&self, a: usize, b: usize) -> usize {
        self.index_of(&self.add(&self.element(a), &self.element(b)))
    }

    /// `tau_s(x) = s x`, componentwise modulo each invariant factor.
    pub fn tau(&self, s: i64, x: &GroupElement) -> GroupElement {
        GroupElement(
            x.0.iter()
                .zip(&self.factors)
                .map(|(&xi, &m)| arith::mul_mod(arith::rem_euclid(s, m), xi % m, m))
                .collect(),
        )
    }

    /// `tau_s` as a map on element indices.
    pub fn tau_table(&self, s: i64) -> Vec<usize> {
        (0..self.len())
            .map(|i| self.index_of(&self.tau(s, &self.element(i))))
            .collect()
    }

    /// Whether `s` is a unit modulo the exponent (so `tau_s` is bijective).
    pub fn is_unit(&self, s: i64) -> bool {
        let m = self.exponent();
        arith::gcd(arith::rem_euclid(s, m), m) == 1
    }

    /// The canonical embedding of the i-th cyclic factor.
    pub fn cyclic_subgroup(&self, i: usize) -> Vec<GroupElement> {
        (0..self.factors[i])
            .map(|v| {
                let mut e = vec![0; self.rank()];
                e[i] = v;
                GroupElement(e)
            })
            .collect()
    }
}

/// `tau_s(x) = s x` in `g`.
pub fn tau_apply(s: i64, x: &GroupElement, g: &GroupShape) -> GroupElement {
    g.tau(s, x)
}

impl fmt::Display for GroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for GroupShape {
    type Err = Error;

    /// Parses `"3x9"`; `"1"` is the trivial group. Factors given in any
    /// order are normalized to invariant-factor form.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadGroupSpec(s.to_string());
        let parts: Vec<u64> = s
            .trim()
            .split(['x', 'X'])
            .map(|p| p.trim().parse::<u64>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        if parts.is_empty() || parts.contains(&0) {
            return Err(bad());
        }
        Ok(Self::from_cyclic_factors(&parts))
    }
}

impl Serialize for GroupShape {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

/// Non-increasing partitions of `k`, largest first part first.
pub fn partitions(k: u32) -> Vec<Vec<u32>> {
    fn rec(k: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=k.min(max)).rev() {
            prefix.push(part);
            rec(k - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

/// All isomorphism classes of abelian groups of order `n`.
///
/// Ordered by the partitions of each prime exponent (primes ascending,
/// partitions from `[k]` down to `[1, ..., 1]`), the last prime varying fastest.
pub fn enumerate_groups(n: u64) -> Result<Vec<GroupShape>> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "group order must be positive".into(),
        ));
    }
    let per_prime: Vec<(u64, Vec<Vec<u32>>)> = arith::factorize(n)
        .into_iter()
        .map(|(p, k)| (p, partitions(k)))
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; per_prime.len()];
    loop {
        let parts: Vec<(u64, Vec<u32>)> = per_prime
            .iter()
            .zip(&choice)
            .map(|((p, ps), &c)| (*p, ps[c].clone()))
            .collect();
        out.push(GroupShape::from_prime_partitions(&parts));
        // odometer over the partition choices
        let mut i = per_prime.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < per_prime[i].1.len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_small_orders() {
        assert_eq!(enumerate_groups(1).unwrap(), vec![GroupShape::trivial()]);
        let four: Vec<String> = enumerate_groups(4)
            .unwrap()
            .iter()
            .map(|g| g.to_string())
            .collect();
        assert_eq!(four, ["4", "2x2"]);
        let t27: Vec<String> = enumerate_groups(27)
            .unwrap()
            .iter()
            .map(|g| g.to_string())
            .collect();
        assert_eq!(t27, ["27", "3x9", "3x3x3"]);
        assert_eq!(enumerate_groups(72).unwrap().len(), 6);
        assert!(enumerate_groups(0).is_err());
    }

    #[test]
    fn tau_examples() {
        let g: GroupShape = "3x9".parse().unwrap();
        let x = GroupElement(vec![1, 1]);
        assert_eq!(g.tau(1, &x), x);
        assert_eq!(g.tau(16, &x), GroupElement(vec![1, 7]));
        assert_eq!(
            tau_apply(-1, &GroupElement(vec![1, 2]), &g),
            GroupElement(vec![2, 7])
        );
    }

    #[test]
    fn parse_and_display() {
        let g: GroupShape = "9x3".parse().unwrap();
        assert_eq!(g.to_string(), "3x9");
        assert_eq!("1".parse::<GroupShape>().unwrap(), GroupShape::trivial());
        assert_eq!("6".parse::<GroupShape>().unwrap().factors(), &[6]);
        assert_eq!("2x3".parse::<GroupShape>().unwrap().factors(), &[6]);
        assert!("3x".parse::<GroupShape>().is_err());
        assert!("0".parse::<GroupShape>().is_err());
        assert!("abc".parse::<GroupShape>().is_err());
        assert_eq!(GroupElement(vec![1, 7]).to_string(), "(1,7)");
    }

    #[test]
    fn new_checks_divisibility() {
        assert!(GroupShape::new(vec![3, 9]).is_ok());
        assert!(GroupShape::new(vec![9, 3]).is_err());
        assert!(GroupShape::new(vec![1, 3]).is_err());
    }

    #[test]
    fn index_round_trip() {
        let g: GroupShape = "2x4x8".parse().unwrap();
        for i in 0..g.len() {
            assert_eq!(g.index_of(&g.element(i)), i);
        }
        // lexicographic order matches index order
        let els: Vec<GroupElement> = g.elements().collect();
        assert!(els.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn trivial_group() {
        let g = GroupShape::trivial();
        assert_eq!((g.order(), g.exponent(), g.len()), (1, 1, 1));
        assert_eq!(g.element(0), GroupElement(vec![]));
        assert!(g.is_unit(-2));
    }
}
