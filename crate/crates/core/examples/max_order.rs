//! The family n_r = (p_1 ... p_r)^4 with a(n_r) = 5^r, and how its ratio
//! log a(n) log log n / log n approaches (log 5)/4.
//!
//!     cargo run --example max_order -- [r] [q]

use hsd_codes::counting::max_order_suite;

fn main() -> hsd_codes::Result<()> {
    let mut args = std::env::args().skip(1);
    let r: usize = args
        .next()
        .map_or(30, |a| a.parse().expect("r must be an integer"));
    let q: Option<u64> = args
        .next()
        .map(|a| a.parse().expect("q must be an integer"));

    let rep = max_order_suite(r, q)?;
    println!("limit (log 5)/4 = {:.6}", rep.limit);
    println!(
        "{:>3} {:>6} {:>10} {:>4} {:>6} {:>9}",
        "r", "p_r", "log n", "A", "exact", "ratio"
    );
    for row in &rep.rows {
        println!(
            "{:>3} {:>6} {:>10.3} {:>4} {:>6} {:>9.5}",
            row.r,
            row.primes.last().expect("r >= 1"),
            row.log_n,
            row.big_a,
            row.exact_match,
            row.kratzel_ratio
        );
    }
    Ok(())
}
