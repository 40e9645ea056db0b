//! Compares the zero-set formula for Hermitian duals, G \ tau_(-q)(X), with a
//! brute-force null-space computation for every orbit-union zero set X.
//!
//!     cargo run --release --example duality_oracle -- [group] [q]

use hsd_codes::codes::{brute_force_dual, GroupAlgebra, ZeroSet};
use hsd_codes::group::GroupShape;

fn main() -> hsd_codes::Result<()> {
    let mut args = std::env::args().skip(1);
    let group: GroupShape = args.next().as_deref().unwrap_or("15").parse()?;
    let q: u64 = args
        .next()
        .map_or(2, |a| a.parse().expect("q must be an integer"));
    let alg = GroupAlgebra::new(&group, q)?;
    let orbits = alg.orbits();
    println!(
        "{group}, q = {q}: {} orbits, K = GF({})",
        orbits.len(),
        alg.tower().k().order()
    );

    let (mut agree, mut total) = (0, 0);
    for mask in 0u64..1 << orbits.len() {
        let x = ZeroSet::new(
            (0..orbits.len())
                .filter(|&i| mask >> i & 1 == 1)
                .flat_map(|i| orbits.orbit(i).iter().copied()),
        );
        let code = alg.code_from_zero_set(&x)?;
        let formula = alg.code_from_zero_set(&alg.hermitian_dual_zero_set(&x))?;
        let oracle = brute_force_dual(code.generator())?;
        total += 1;
        agree += usize::from(oracle.same_row_space(formula.generator()));
    }
    println!("formula and brute force agree on {agree} of {total} zero sets");
    Ok(())
}
