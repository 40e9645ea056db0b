//! HSD(x), the friendly-prime count against (1 - delta) Li(x), and the
//! stability of b0_hat = HSD(x) log^delta(x) / x.
//!
//!     cargo run --release --example counting_hsd -- [q] [x]
//!
//! `x` must exceed 1000 so that at least three smaller powers of ten remain.

use hsd_codes::counting::{density_delta, hsd_count, hsd_fit, pq_count, write_csv};

fn main() -> hsd_codes::Result<()> {
    let mut args = std::env::args().skip(1);
    let q: u64 = args
        .next()
        .map_or(2, |a| a.parse().expect("q must be an integer"));
    let x: u64 = args
        .next()
        .map_or(1_000_000, |a| a.parse().expect("x must be an integer"));

    println!("delta({q}) = {}", density_delta(q)?);
    // fit on smaller x, then predict HSD(x) from the last estimate
    let xs: Vec<u64> = (2..=7).map(|e| 10u64.pow(e)).filter(|&v| v < x).collect();
    let fit = hsd_fit(&xs, q)?;
    for s in &fit.samples {
        println!("HSD({}) = {}, b0_hat = {:.6}", s.x, s.hsd, s.b0_hat);
    }
    println!("spread of b0_hat: {:.4}", fit.spread);

    let b0 = fit.samples.last().map(|s| s.b0_hat);
    let reports = vec![hsd_count(x, q, b0)?, pq_count(x, q)?];
    write_csv(&reports, std::io::stdout())?;
    Ok(())
}
