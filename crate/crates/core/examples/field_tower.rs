//! The tower F_p < F_q < F = GF(q^2) < K for q = 4 and exponent m = 9:
//! moduli, the primitive m-th root zeta and the solutions gamma of
//! 1/n + gamma^(q+1) = 0.
//!
//!     cargo run --example field_tower -- [q] [m]

use hsd_codes::field::FieldTower;

fn main() -> hsd_codes::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let q = args.first().copied().unwrap_or(4);
    let m = args.get(1).copied().unwrap_or(9);

    let tower = FieldTower::build(q, m)?;
    let (f, k) = (tower.f(), tower.k());
    println!(
        "q = {q} = {}^{}, m = {m}",
        tower.characteristic(),
        tower.t()
    );
    println!("F = GF({}), modulus code {}", f.order(), f.modulus_code());
    println!(
        "K = GF({}) = F^{}, modulus code {}",
        k.order(),
        tower.s(),
        k.modulus_code()
    );

    let zeta = tower.zeta();
    println!("zeta = {zeta} (order {:?})", k.element_order(zeta));

    // x -> x^q is the Hermitian conjugation on F; it is an involution
    let a = f.generator();
    println!(
        "conj({a}) = {}, conj(conj({a})) = {}",
        tower.conj(a),
        tower.conj(tower.conj(a))
    );

    // every element of F embeds into K and comes back
    assert!(f
        .elements()
        .all(|x| tower.restrict(tower.embed(x)) == Some(x)));

    let n = m;
    let gammas = tower.gamma_solutions(n)?;
    println!("gamma with 1/{n} + gamma^{} = 0: {gammas:?}", q + 1);
    println!("canonical gamma: {}", tower.solve_gamma(n)?.code);
    Ok(())
}
