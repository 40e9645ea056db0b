use num_rational::Ratio;

use crate::arith;
use crate::error::{Error, Result};

/// Density of the primes that are not friendly for `q = p^t`, with
/// `lambda = v_2(t)`.
pub fn density_delta(q: u64) -> Result<Ratio<u64>> {
    let (p, t) = arith::prime_power(q)?;
    let lambda = arith::v2(t as u64);
    let third = |num: u64, den_pow: u32| Ratio::new(num, 3 << den_pow);
    Ok(match (p, lambda) {
        (2, 0) => Ratio::new(7, 24),
        (2, 1) => Ratio::new(1, 3),
        (2, l) => third(1, l + 1),
        (_, l) => third(1, l),
    })
}

/// `1 - delta(q)`, the density of the friendly primes.
pub fn friendly_density(q: u64) -> Result<Ratio<u64>> {
    Ok(Ratio::from_integer(1) - density_delta(q)?)
}

pub fn ratio_to_f64(r: Ratio<u64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// `Li(x) = int_2^x dt / log t`.
///
/// Integrated as `int e^u / u du` over `[log 2, log x]` in unit-length
/// pieces, each with an absolute target scaled to its own size.
pub fn li(x: f64) -> Result<f64> {
    if x.is_nan() || x < 2.0 || x.is_infinite() {
        return Err(Error::InvalidArgument(format!(
            "Li needs finite x >= 2, got {x}"
        )));
    }
    let (a, b) = (2f64.ln(), x.ln());
    let integrand = |u: f64| u.exp() / u;
    let mut total = 0.0;
    let mut lo = a;
    while lo < b {
        let hi = (lo + 1.0).min(b);
        let scale = integrand(hi) * (hi - lo);
        total += quadrature::integrate(integrand, lo, hi, scale * 1e-13).integral;
        lo = hi;
    }
    Ok(total)
}
