use crate::arith;
use crate::error::{Error, Result};

use super::partition::small_partitions;

/// Largest bound a [`SieveContext`] will allocate for.
pub const SIEVE_LIMIT: u64 = 100_000_000;

/// Smallest-prime-factor table up to `x` with the friendly primes for `q`
/// marked. Without `q` every prime counts as friendly.
///
/// Composite `n <= x` have a least prime factor at most `sqrt(x) < 2^16`, so
/// the table stores it as `u16` and uses 0 for primes.
#[derive(Clone, Debug)]
pub struct SieveContext {
    bound: u64,
    q: Option<u64>,
    spf: Vec<u16>,
    friendly: Vec<u64>,
    partitions: Vec<u64>,
}

/// Friendliness of the prime `r` from the 2-part of `ord_r(q)` alone:
/// with `r - 1 = 2^e u`, `v = q^u` has order `2^j` and `ord_r(q) = 2 (mod 4)`
/// exactly when `j = 1`.
fn friendly_by_two_part(r: u64, q: u64) -> bool {
    if q.is_multiple_of(r) {
        return false;
    }
    let e = (r - 1).trailing_zeros();
    let mut v = arith::pow_mod(q % r, (r - 1) >> e, r);
    let mut j = 0;
    while v != 1 {
        v = arith::mul_mod(v, v, r);
        j += 1;
    }
    j != 1
}

impl SieveContext {
    pub fn new(bound: u64, q: Option<u64>) -> Result<Self> {
        if bound > SIEVE_LIMIT {
            return Err(Error::BoundExceeded {
                value: bound,
                max: SIEVE_LIMIT,
            });
        }
        if let Some(q) = q {
            arith::prime_power(q)?;
        }
        let len = bound as usize + 1;
        let mut spf = vec![0u16; len];
        let mut p = 2usize;
        while p * p < len {
            if spf[p] == 0 {
                for j in (p * p..len).step_by(p) {
                    if spf[j] == 0 {
                        spf[j] = p as u16;
                    }
                }
            }
            p += 1;
        }
        let mut friendly = vec![0u64; len.div_ceil(64)];
        for r in 2..len {
            if spf[r] == 0 && q.is_none_or(|q| friendly_by_two_part(r as u64, q)) {
                friendly[r / 64] |= 1 << (r % 64);
            }
        }
        Ok(Self {
            bound,
            q,
            spf,
            friendly,
            partitions: small_partitions(64),
        })
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn q(&self) -> Option<u64> {
        self.q
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2 && n <= self.bound && self.spf[n as usize] == 0
    }

    /// Least prime factor of `2 <= n <= bound`.
    pub fn least_prime_factor(&self, n: u64) -> u64 {
        match self.spf[n as usize] {
            0 => n,
            p => p as u64,
        }
    }

    pub fn is_friendly_prime(&self, r: u64) -> bool {
        r <= self.bound && self.friendly[r as usize / 64] >> (r % 64) & 1 == 1
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        (2..=self.bound).filter(|&n| self.spf[n as usize] == 0)
    }

    pub fn friendly_primes(&self) -> impl Iterator<Item = u64> + '_ {
        (2..=self.bound).filter(|&n| self.is_friendly_prime(n))
    }

    /// Prime factorization by repeated least-prime-factor division.
    pub fn factorize(&self, mut n: u64) -> Vec<(u64, u32)> {
        let mut out: Vec<(u64, u32)> = Vec::new();
        while n > 1 {
            let p = self.least_prime_factor(n);
            match out.last_mut() {
                Some((last, k)) if *last == p => *k += 1,
                _ => out.push((p, 1)),
            }
            n /= p;
        }
        out
    }

    /// `a(n)` for `1 <= n <= bound`.
    pub fn abelian_count(&self, n: u64) -> u64 {
        self.factorize(n)
            .iter()
            .map(|&(_, k)| self.partitions[k as usize])
            .product()
    }

    pub fn in_semigroup(&self, n: u64) -> bool {
        self.factorize(n)
            .iter()
            .all(|&(p, _)| self.is_friendly_prime(p))
    }

    /// `a(n)` when `n` is in the semigroup, else 0.
    pub fn semigroup_abelian_count(&self, mut n: u64) -> u64 {
        let mut a = 1;
        while n > 1 {
            let p = self.least_prime_factor(n);
            if !self.is_friendly_prime(p) {
                return 0;
            }
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            a *= self.partitions[k];
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::splitting::classify_prime;

    #[test]
    fn spf_is_least_prime_factor() {
        let s = SieveContext::new(10_000, None).unwrap();
        for n in 2..=10_000 {
            assert_eq!(s.least_prime_factor(n), arith::factorize(n)[0].0, "n = {n}");
            assert_eq!(s.is_prime(n), arith::is_prime(n));
            assert_eq!(s.factorize(n), arith::factorize(n));
        }
        assert_eq!(s.primes().count(), 1229);
    }

    #[test]
    fn two_part_shortcut_matches_full_order() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 27, 125] {
            let s = SieveContext::new(5_000, Some(q)).unwrap();
            for r in s.primes() {
                let full = classify_prime(r, q).unwrap().is_friendly();
                assert_eq!(s.is_friendly_prime(r), full, "r = {r}, q = {q}");
            }
        }
    }

    #[test]
    fn semigroup_values() {
        let s = SieveContext::new(100, Some(2)).unwrap();
        let members: Vec<u64> = (1..=30).filter(|&n| s.in_semigroup(n)).collect();
        assert_eq!(members, [1, 5, 7, 13, 17, 23, 25, 29]);
        assert_eq!(s.semigroup_abelian_count(25), 2);
        assert_eq!(s.semigroup_abelian_count(15), 0);
        assert_eq!(s.abelian_count(72), 6);
        assert!(SieveContext::new(SIEVE_LIMIT + 1, None).is_err());
        assert!(SieveContext::new(10, Some(6)).is_err());
    }
}
