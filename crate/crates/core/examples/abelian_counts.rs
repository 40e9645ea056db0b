//! P(k), a(n), the summatory function of a(n) against its three-term main
//! term, and the number of distinct values a(n) takes.

use hsd_codes::counting::{
    abelian_count, abelian_sum, distinct_bound, distinct_values, partition_count,
};

fn main() -> hsd_codes::Result<()> {
    let p: Vec<String> = (0..=12)
        .map(|k| partition_count(k).map(|v| v.to_string()))
        .collect::<Result<_, _>>()?;
    println!("P(0..=12) = {}", p.join(", "));
    println!("P(1000) = {}", partition_count(1000)?);
    for n in [16u64, 72, 2u64.pow(10) * 3u64.pow(5)] {
        println!("a({n}) = {}", abelian_count(n)?);
    }

    for e in 2..=7 {
        let r = abelian_sum(10u64.pow(e))?;
        let pred = r.predicted.expect("main term");
        println!(
            "x = 10^{e}: sum a(n) = {}, main term {pred:.1}, relative gap {:.2e}",
            r.exact,
            (r.exact as f64 - pred) / r.exact as f64
        );
    }

    for e in [3u32, 4, 5, 6] {
        let x = 10u64.pow(e);
        let c = distinct_values(x, None)?.exact;
        let cg = distinct_values(x, Some(2))?.exact;
        println!(
            "x = 10^{e}: C = {c}, C_G(q=2) = {cg}, exp(2 pi sqrt(log x / 3 log log x)) = {:.1}",
            distinct_bound(x as f64, 1.0)
        );
    }
    Ok(())
}
