//! Which odd orders n admit self-dual extended split codes over GF(q^2),
//! and how many abelian groups of each order that covers.
//!
//!     cargo run --example existence_table -- [max_n]

use hsd_codes::arith::gcd;
use hsd_codes::counting::abelian_count;
use hsd_codes::splitting::exists_hsd;

fn main() -> hsd_codes::Result<()> {
    let max: u64 = std::env::args()
        .nth(1)
        .map_or(45, |a| a.parse().expect("integer bound"));
    let qs = [2u64, 3, 4, 5, 8, 9];
    print!("{:>4} {:>3}", "n", "a");
    for q in qs {
        print!(" {:>4}", format!("q={q}"));
    }
    println!();
    for n in (1..=max).step_by(2) {
        print!("{n:>4} {:>3}", abelian_count(n)?);
        for q in qs {
            let cell = if gcd(n, q) != 1 {
                "-"
            } else if exists_hsd(n, q)?.exists {
                "yes"
            } else {
                "no"
            };
            print!(" {cell:>4}");
        }
        println!();
    }
    Ok(())
}
