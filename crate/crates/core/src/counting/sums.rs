use std::collections::BTreeSet;

use rayon::prelude::*;

use super::density::{density_delta, friendly_density, li, ratio_to_f64};
use super::partition::{abelian_count, semigroup_member};
use super::report::CountingReport;
use super::sieve::SieveContext;
use crate::error::{Error, Result};

/// Constants of the three-term main term of `sum_(n <= x) a(n)`.
pub const C1: f64 = 2.2948565916;
pub const C2: f64 = -14.6475663016;
pub const C3: f64 = 118.6924619727;

/// Largest `x` at which [`hsd_count`] also runs the direct method.
pub const DIRECT_CHECK_LIMIT: u64 = 1_000_000;

/// Largest `x` accepted by [`distinct_values`].
pub const DISTINCT_LIMIT: u64 = 10_000_000;

/// `HSD(x)` over the sieve, summed over independent ranges.
pub fn hsd_sieve(ctx: &SieveContext, x: u64) -> u64 {
    assert!(x <= ctx.bound(), "x exceeds the sieve bound");
    (1..=x)
        .into_par_iter()
        .map(|n| ctx.semigroup_abelian_count(n))
        .sum()
}

/// `HSD(x)` by trial-division factorization and full order computations.
pub fn hsd_direct(x: u64, q: u64) -> Result<u64> {
    (1..=x)
        .into_par_iter()
        .map(|n| -> Result<u64> {
            if !semigroup_member(n, q)? {
                return Ok(0);
            }
            u64::try_from(abelian_count(n)?).map_err(|_| Error::Internal("a(n) overflow".into()))
        })
        .sum()
}

/// `HSD(x)`, with `b0 x / log^delta x` as the prediction when `b0` is given.
/// Up to [`DIRECT_CHECK_LIMIT`] the sieve is checked against the direct method.
pub fn hsd_count(x: u64, q: u64, b0: Option<f64>) -> Result<CountingReport> {
    let ctx = SieveContext::new(x.max(1), Some(q))?;
    let exact = hsd_sieve(&ctx, x);
    if x <= DIRECT_CHECK_LIMIT {
        let direct = hsd_direct(x, q)?;
        if direct != exact {
            return Err(Error::Internal(format!(
                "HSD({x}) sieve {exact} != direct {direct}"
            )));
        }
    }
    let delta = density_delta(q)?;
    let scale = (x as f64) / (x as f64).ln().powf(ratio_to_f64(delta));
    let mut report = CountingReport::new("hsd", x, Some(q), exact, b0.map(|b| b * scale))
        .with("delta", delta)
        .with("tau", friendly_density(q)?);
    if let Some(b) = b0 {
        report = report.with("b0", super::report::fmt12(b));
    }
    Ok(report)
}

/// Number of friendly primes up to `x` against `(1 - delta) Li(x)`.
pub fn pq_count(x: u64, q: u64) -> Result<CountingReport> {
    let ctx = SieveContext::new(x.max(1), Some(q))?;
    let exact = ctx.friendly_primes().count() as u64;
    let tau = friendly_density(q)?;
    let predicted = if x >= 2 {
        Some(ratio_to_f64(tau) * li(x as f64)?)
    } else {
        None
    };
    Ok(CountingReport::new("pq", x, Some(q), exact, predicted)
        .with("delta", density_delta(q)?)
        .with("tau", tau))
}

/// `c1 x + c2 x^(1/2) + c3 x^(1/3)`.
pub fn abelian_sum_main_term(x: f64) -> f64 {
    C1 * x + C2 * x.sqrt() + C3 * x.cbrt()
}

/// `sum_(n <= x) a(n)` against the three-term main term.
pub fn abelian_sum(x: u64) -> Result<CountingReport> {
    let ctx = SieveContext::new(x.max(1), None)?;
    let exact = (1..=x).into_par_iter().map(|n| ctx.abelian_count(n)).sum();
    Ok(CountingReport::new(
        "asum",
        x,
        None,
        exact,
        Some(abelian_sum_main_term(x as f64)),
    )
    .with("c1", C1)
    .with("c2", C2)
    .with("c3", C3))
}

/// `exp(slack 2 pi sqrt(log x / (3 log log x)))`, the growth scale of the
/// number of distinct values of `a(n)`.
pub fn distinct_bound(x: f64, slack: f64) -> f64 {
    let l = x.ln();
    (slack * 2.0 * std::f64::consts::PI * (l / (3.0 * l.ln())).sqrt()).exp()
}

/// Number of distinct values of `a(n)` over `n <= x` (in the semigroup for
/// `q` when given), against the scale with slack 1.
pub fn distinct_values(x: u64, q: Option<u64>) -> Result<CountingReport> {
    if x > DISTINCT_LIMIT {
        return Err(Error::BoundExceeded {
            value: x,
            max: DISTINCT_LIMIT,
        });
    }
    let ctx = SieveContext::new(x.max(1), q)?;
    let values: BTreeSet<u64> = (1..=x)
        .into_par_iter()
        .map(|n| ctx.semigroup_abelian_count(n))
        .filter(|&a| a > 0)
        .fold(BTreeSet::new, |mut s, a| {
            s.insert(a);
            s
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    let predicted = (x >= 16).then(|| distinct_bound(x as f64, 1.0));
    Ok(CountingReport::new(
        "distinct",
        x,
        q,
        values.len() as u64,
        predicted,
    ))
}

/// One sample of the `b0` estimate.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct FitSample {
    pub x: u64,
    pub hsd: u64,
    pub b0_hat: f64,
}

#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct FitReport {
    pub q: u64,
    pub delta: String,
    pub samples: Vec<FitSample>,
    /// `(max - min) / mean` of the estimates.
    pub spread: f64,
}

/// `b0_hat(x) = HSD(x) log^delta(x) / x` at each sample.
pub fn hsd_fit(xs: &[u64], q: u64) -> Result<FitReport> {
    let mut xs: Vec<u64> = xs.to_vec();
    xs.sort_unstable();
    xs.dedup();
    if xs.len() < 3 {
        return Err(Error::InvalidArgument(
            "hsd_fit needs at least 3 distinct sample points".into(),
        ));
    }
    if xs[0] < 3 {
        return Err(Error::InvalidArgument(
            "sample points must be at least 3".into(),
        ));
    }
    let max = *xs.last().expect("nonempty");
    let ctx = SieveContext::new(max, Some(q))?;
    let delta = density_delta(q)?;
    let d = ratio_to_f64(delta);
    let bounds: Vec<u64> = std::iter::once(0).chain(xs.iter().copied()).collect();
    let pieces: Vec<u64> = bounds
        .windows(2)
        .map(|w| {
            (w[0] + 1..=w[1])
                .into_par_iter()
                .map(|n| ctx.semigroup_abelian_count(n))
                .sum()
        })
        .collect();
    let mut acc = 0;
    let samples: Vec<FitSample> = xs
        .iter()
        .zip(pieces)
        .map(|(&x, piece)| {
            acc += piece;
            let xf = x as f64;
            FitSample {
                x,
                hsd: acc,
                b0_hat: acc as f64 * xf.ln().powf(d) / xf,
            }
        })
        .collect();
    let est: Vec<f64> = samples.iter().map(|s| s.b0_hat).collect();
    let hi = est.iter().copied().fold(f64::MIN, f64::max);
    let lo = est.iter().copied().fold(f64::MAX, f64::min);
    let mean = est.iter().sum::<f64>() / est.len() as f64;
    Ok(FitReport {
        q,
        delta: delta.to_string(),
        samples,
        spread: (hi - lo) / mean,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hsd_small() {
        assert_eq!(hsd_count(1, 2, None).unwrap().exact, 1);
        assert_eq!(hsd_count(30, 2, None).unwrap().exact, 9);
        let r = hsd_count(1000, 3, Some(1.0)).unwrap();
        assert!(r.predicted.unwrap() > 0.0);
        assert_eq!(r.constants["delta"], "1/3");
    }

    #[test]
    fn pq_small() {
        assert_eq!(pq_count(10, 2).unwrap().exact, 2);
        let counts: Vec<u64> = (2..200).map(|x| pq_count(x, 3).unwrap().exact).collect();
        assert!(counts.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn abelian_sum_small() {
        assert_eq!(abelian_sum(10).unwrap().exact, 14);
        assert_eq!(abelian_sum(1).unwrap().exact, 1);
    }

    #[test]
    fn distinct_small() {
        assert_eq!(distinct_values(10, None).unwrap().exact, 3);
        assert!(distinct_values(DISTINCT_LIMIT + 1, None).is_err());
        for x in [1_000, 10_000] {
            assert!(
                distinct_values(x, Some(2)).unwrap().exact
                    <= distinct_values(x, None).unwrap().exact
            );
        }
    }

    #[test]
    fn fit_small() {
        let f = hsd_fit(&[10_000, 1_000, 100_000], 2).unwrap();
        assert_eq!(f.delta, "7/24");
        assert!(f.samples.iter().all(|s| s.b0_hat > 0.0));
        assert_eq!(f.samples[0].x, 1_000);
        assert_eq!(f.samples[2].hsd, hsd_count(100_000, 2, None).unwrap().exact);
        assert!(hsd_fit(&[100, 1000], 2).is_err());
    }
}
