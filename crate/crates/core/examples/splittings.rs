//! Orbits of multiplication by q^2 and the canonical splitting by -q, for a
//! group that splits and one that does not.
//!
//!     cargo run --example splittings -- [group] [q]

use hsd_codes::group::GroupShape;
use hsd_codes::splitting::{build_splitting, exists_hsd, q2_orbits};
use hsd_codes::Error;

fn show(group: &GroupShape, q: u64) -> hsd_codes::Result<()> {
    let orbits = q2_orbits(group, q)?;
    println!(
        "{group}, q = {q}: {} orbits of x -> {}x",
        orbits.len(),
        orbits.multiplier()
    );
    for i in 0..orbits.len() {
        let elems: Vec<String> = orbits
            .orbit_elements(i, group)
            .iter()
            .map(ToString::to_string)
            .collect();
        println!("  {}", elems.join(" "));
    }
    match build_splitting(group, q) {
        Ok(sp) => println!("  splitting: {}", sp.to_json(false)?),
        Err(Error::Obstructed(ob)) => println!("  no splitting: {ob}"),
        Err(e) => return Err(e),
    }
    let report = exists_hsd(group.order(), q)?;
    for p in &report.primes {
        println!("  prime {}: ord = {:?}, {:?}", p.r, p.ord, p.verdict);
    }
    Ok(())
}

fn main() -> hsd_codes::Result<()> {
    let mut args = std::env::args().skip(1);
    if let (Some(g), Some(q)) = (args.next(), args.next()) {
        return show(&g.parse()?, q.parse().expect("q must be an integer"));
    }
    show(&"3x9".parse()?, 4)?;
    show(&GroupShape::cyclic(7), 2)?;
    show(&GroupShape::cyclic(3), 2)
}
