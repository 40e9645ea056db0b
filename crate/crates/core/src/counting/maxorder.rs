use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use super::partition::partition_table;
use crate::arith;
use crate::error::{Error, Result};
use crate::splitting::classify_prime;

/// Largest `r` accepted by [`max_order_suite`].
pub const MAX_ORDER_LIMIT: usize = 50;

/// `(log 5) / 4`, the limsup of the Kratzel ratio.
pub fn kratzel_limit() -> f64 {
    5f64.ln() / 4.0
}

/// One member `n_r = (p_1 ... p_r)^4` of the extremal family.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MaxOrderRow {
    pub r: usize,
    pub primes: Vec<u64>,
    /// `log n_r`.
    pub log_n: f64,
    /// `a(n_r)`, decimal.
    pub a: String,
    /// Smallest `A` with `sum_(p <= A) log p >= (log n_r) / 4` over the prime set.
    pub big_a: u64,
    /// Number of primes of the set up to `A`.
    pub count_to_a: usize,
    /// `a(n_r) = 5^count_to_a` as integers.
    pub exact_match: bool,
    /// `log a(n_r) log log n_r / log n_r`.
    pub kratzel_ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MaxOrderReport {
    pub q: Option<u64>,
    pub limit: f64,
    pub rows: Vec<MaxOrderRow>,
}

fn in_set(r: u64, q: Option<u64>) -> Result<bool> {
    Ok(match q {
        None => true,
        Some(q) => classify_prime(r, q)?.is_friendly(),
    })
}

/// Builds `n_1, ..., n_r` from the first primes of the set (all primes, or
/// the friendly primes for `q`) and checks `a(n_i) = 5^P(A)` exactly.
pub fn max_order_suite(r: usize, q: Option<u64>) -> Result<MaxOrderReport> {
    if r == 0 || r > MAX_ORDER_LIMIT {
        return Err(Error::BoundExceeded {
            value: r as u64,
            max: MAX_ORDER_LIMIT as u64,
        });
    }
    if let Some(q) = q {
        arith::prime_power(q)?;
    }
    let mut primes = Vec::with_capacity(r);
    let mut c = 2;
    while primes.len() < r {
        if arith::is_prime(c) && in_set(c, q)? {
            primes.push(c);
        }
        c += 1;
    }

    let table = partition_table(8);
    let five = BigUint::from(5u32);
    let mut rows = Vec::with_capacity(r);
    for i in 1..=r {
        let chosen = &primes[..i];
        let n: BigUint = chosen.iter().map(|&p| BigUint::from(p).pow(4)).product();

        // a(n) from a trial-division factorization of n over the chosen primes
        let mut rest = n.clone();
        let mut a = BigUint::one();
        for &p in chosen {
            let bp = BigUint::from(p);
            let mut k = 0;
            while (&rest % &bp).bits() == 0 {
                rest /= &bp;
                k += 1;
            }
            a *= &table[k];
        }
        if !rest.is_one() {
            return Err(Error::Internal("n_r has an unexpected prime factor".into()));
        }

        // (log n)/4 <= sum log p  <=>  n <= (prod_(p <= A) p)^4
        let mut big_a = 1u64;
        let mut prod = BigUint::one();
        let mut count = 0;
        while prod.pow(4) < n {
            big_a += 1;
            if arith::is_prime(big_a) && in_set(big_a, q)? {
                prod *= big_a;
                count += 1;
            }
        }

        let exact_match = a == five.pow(count as u32);
        let log_n: f64 = chosen.iter().map(|&p| 4.0 * (p as f64).ln()).sum();
        let log_a = a_log(&a);
        rows.push(MaxOrderRow {
            r: i,
            primes: chosen.to_vec(),
            log_n,
            a: a.to_string(),
            big_a,
            count_to_a: count,
            exact_match,
            kratzel_ratio: log_a * log_n.ln() / log_n,
        });
    }
    Ok(MaxOrderReport {
        q,
        limit: kratzel_limit(),
        rows,
    })
}

fn a_log(a: &BigUint) -> f64 {
    // a = 5^k here, but take the log of the integer as given
    let bits = a.bits();
    let shift = bits.saturating_sub(53);
    let top = a >> shift;
    let mantissa: f64 = top.to_string().parse().expect("decimal parses");
    mantissa.ln() + shift as f64 * 2f64.ln()
}
