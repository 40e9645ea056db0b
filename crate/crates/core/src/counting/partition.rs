use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith;
use crate::error::{Error, Result};
use crate::splitting::classify_prime;

/// Largest `k` accepted by [`partition_count`].
pub const PARTITION_LIMIT: u64 = 10_000;

/// `P(0), ..., P(k)` by Euler's pentagonal-number recurrence.
pub fn partition_table(k: usize) -> Vec<BigUint> {
    let mut p: Vec<BigUint> = Vec::with_capacity(k + 1);
    p.push(BigUint::one());
    for n in 1..=k {
        let (mut plus, mut minus) = (BigUint::zero(), BigUint::zero());
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > n {
                break;
            }
            let target = if j % 2 == 1 { &mut plus } else { &mut minus };
            *target += &p[n - g1];
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= n {
                *target += &p[n - g2];
            }
        }
        p.push(plus - minus);
    }
    p
}

/// `P(k)`, the number of partitions of `k`.
pub fn partition_count(k: u64) -> Result<BigUint> {
    if k > PARTITION_LIMIT {
        return Err(Error::BoundExceeded {
            value: k,
            max: PARTITION_LIMIT,
        });
    }
    Ok(partition_table(k as usize)
        .pop()
        .expect("table is nonempty"))
}

/// `P(0), ..., P(k)` as machine integers; enough for exponents of any `u64`.
pub(crate) fn small_partitions(k: usize) -> Vec<u64> {
    partition_table(k)
        .iter()
        .map(|v| u64::try_from(v).expect("P(k) fits in u64 for small k"))
        .collect()
}

/// `a(n)`: the number of abelian groups of order `n`, `prod P(k_i)`.
pub fn abelian_count(n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let table = partition_table(64);
    Ok(arith::factorize(n)
        .into_iter()
        .map(|(_, k)| &table[k as usize])
        .product())
}

/// Whether `n` lies in the semigroup generated by the friendly primes for
/// `q`. The characteristic of `q` is never friendly, so multiples of it are
/// excluded; `n = 1` is the empty product.
pub fn semigroup_member(n: u64, q: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    arith::prime_power(q)?;
    for (r, _) in arith::factorize(n) {
        if !classify_prime(r, q)?.is_friendly() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::partitions;

    #[test]
    fn small_values() {
        let p: Vec<u64> = small_partitions(10);
        assert_eq!(p, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let p20 = small_partitions(20);
        for (k, &pk) in p20.iter().enumerate() {
            assert_eq!(pk, partitions(k as u32).len() as u64);
        }
        assert_eq!(partition_count(100).unwrap(), BigUint::from(190_569_292u64));
        assert!(partition_count(PARTITION_LIMIT + 1).is_err());
    }

    #[test]
    fn bounded_by_fifth_root_power() {
        let table = partition_table(200);
        for (k, pk) in table.iter().enumerate().skip(1) {
            // P(k) <= 5^(k/4)  <=>  P(k)^4 <= 5^k
            assert!(pk.pow(4) <= BigUint::from(5u32).pow(k as u32), "k = {k}");
        }
    }

    #[test]
    fn abelian_counts() {
        let a = |n| u64::try_from(abelian_count(n).unwrap()).unwrap();
        assert_eq!((a(1), a(7), a(16), a(72)), (1, 1, 5, 6));
        let first: Vec<u64> = (1..=10).map(a).collect();
        assert_eq!(first, [1, 1, 1, 2, 1, 1, 1, 3, 2, 1]);
        assert!(abelian_count(0).is_err());
    }

    #[test]
    fn semigroup_examples() {
        assert!(semigroup_member(25, 2).unwrap());
        assert!(!semigroup_member(15, 2).unwrap());
        assert!(semigroup_member(1, 9).unwrap());
        assert!(!semigroup_member(10, 2).unwrap());
        assert!(!semigroup_member(9, 3).unwrap());
    }
}
