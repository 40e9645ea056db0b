use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    /// `ord_r(q)` is odd or divisible by 4.
    Friendly,
    /// `ord_r(q) = 2 (mod 4)`.
    Obstructed,
    /// `r` is the characteristic of F_q.
    Characteristic,
}

/// How a prime `r` behaves under `q` with respect to splittings by `-q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeClassification {
    pub r: u64,
    /// `ord_r(q)`; absent when `r` divides `q`.
    pub ord: Option<u64>,
    pub ord_mod4: Option<u64>,
    /// `ord_r(q^2)`, computed separately for the second criterion.
    pub ord_q_squared: Option<u64>,
    pub verdict: Verdict,
}

impl PrimeClassification {
    pub fn is_friendly(&self) -> bool {
        self.verdict == Verdict::Friendly
    }
}

/// Classifies the prime `r` for the prime power `q`.
///
/// Both criteria are evaluated: `ord_r(q) != 2 (mod 4)` and
/// "`ord_r(q)` odd or `ord_r(q^2)` even". A disagreement is reported as an
/// internal error since the two are equivalent.
pub fn classify_prime(r: u64, q: u64) -> Result<PrimeClassification> {
    if !arith::is_prime(r) {
        return Err(Error::NotPrime(r));
    }
    let (p, _) = arith::prime_power(q)?;
    if r == p {
        return Ok(PrimeClassification {
            r,
            ord: None,
            ord_mod4: None,
            ord_q_squared: None,
            verdict: Verdict::Characteristic,
        });
    }
    let ord = arith::multiplicative_order(q % r, r).expect("r does not divide q");
    let ord_sq =
        arith::multiplicative_order(arith::mul_mod(q, q, r), r).expect("r does not divide q");
    let by_mod4 = ord % 4 != 2;
    let by_square = ord % 2 == 1 || ord_sq.is_multiple_of(2);
    if by_mod4 != by_square {
        return Err(Error::Internal(format!(
            "criteria disagree for r = {r}, q = {q}: ord = {ord}, ord(q^2) = {ord_sq}"
        )));
    }
    Ok(PrimeClassification {
        r,
        ord: Some(ord),
        ord_mod4: Some(ord % 4),
        ord_q_squared: Some(ord_sq),
        verdict: if by_mod4 {
            Verdict::Friendly
        } else {
            Verdict::Obstructed
        },
    })
}

/// Outcome of the prime-by-prime existence test for order `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExistenceReport {
    pub n: u64,
    pub q: u64,
    pub exists: bool,
    pub primes: Vec<PrimeClassification>,
}

/// Whether abelian groups of order `n` carry ideal codes over F_{q^2} whose
/// extension is Hermitian self-dual: every prime divisor of `n` must be friendly.
///
/// `n` must be odd and coprime to `q`; `n = 1` is vacuously true.
pub fn exists_hsd(n: u64, q: u64) -> Result<ExistenceReport> {
    arith::prime_power(q)?;
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let g = arith::gcd(n, q);
    if g != 1 {
        return Err(Error::NotCoprime { n, q, gcd: g });
    }
    if n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "n = {n} is even; the extended construction needs odd order"
        )));
    }
    let primes = arith::factorize(n)
        .into_iter()
        .map(|(r, _)| classify_prime(r, q))
        .collect::<Result<Vec<_>>>()?;
    let exists = primes.iter().all(PrimeClassification::is_friendly);
    Ok(ExistenceReport {
        n,
        q,
        exists,
        primes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_examples() {
        let c = classify_prime(3, 2).unwrap();
        assert_eq!((c.ord, c.verdict), (Some(2), Verdict::Obstructed));
        let c = classify_prime(7, 2).unwrap();
        assert_eq!((c.ord, c.verdict), (Some(3), Verdict::Friendly));
        let c = classify_prime(3, 4).unwrap();
        assert_eq!((c.ord, c.verdict), (Some(1), Verdict::Friendly));
        let c = classify_prime(5, 2).unwrap();
        assert_eq!(
            (c.ord, c.ord_mod4, c.verdict),
            (Some(4), Some(0), Verdict::Friendly)
        );
        assert_eq!(
            classify_prime(2, 4).unwrap().verdict,
            Verdict::Characteristic
        );
        assert!(matches!(classify_prime(9, 2), Err(Error::NotPrime(9))));
    }

    #[test]
    fn existence_examples() {
        let r = exists_hsd(27, 4).unwrap();
        assert!(r.exists);
        assert_eq!(r.primes.len(), 1);
        assert_eq!(r.primes[0].ord, Some(1));
        assert!(!exists_hsd(3, 2).unwrap().exists);
        assert!(exists_hsd(1, 2).unwrap().exists);
        assert!(exists_hsd(1, 9).unwrap().primes.is_empty());
        assert!(matches!(exists_hsd(6, 3), Err(Error::NotCoprime { .. })));
        assert!(exists_hsd(10, 3).is_err());
    }

    #[test]
    fn dual_criteria_agree_below_ten_thousand() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            for r in (2..10_000).filter(|&r| arith::is_prime(r)) {
                classify_prime(r, q).unwrap();
            }
        }
    }
}
