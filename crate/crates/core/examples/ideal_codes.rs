//! The codes attached to the splitting of Z7 by -2 over GF(4): dimensions,
//! idempotent generators, the equivalence of C0 and C1 under mu_(-2), and
//! their weight distributions.

use hsd_codes::codes::{
    brute_force_dual, weight_enumeration, GeneratorMatrix, GroupAlgebra, ZeroSet,
};
use hsd_codes::group::GroupShape;
use hsd_codes::linalg::Matrix;
use hsd_codes::splitting::build_splitting;

fn main() -> hsd_codes::Result<()> {
    let group = GroupShape::cyclic(7);
    let q = 2;
    let alg = GroupAlgebra::new(&group, q)?;
    let sp = build_splitting(&group, q)?;
    let codes = alg.split_codes(&sp)?;

    for (name, code) in [
        ("C0", &codes.c0),
        ("C1", &codes.c1),
        ("C0^Z", &codes.c0z),
        ("C1^Z", &codes.c1z),
        ("C_Z", &codes.cz),
    ] {
        println!(
            "{name:>5}: zeros {:?}, dimension {}",
            code.zero_set().as_slice(),
            code.dimension()
        );
    }

    let e = alg.idempotent_generator_over_f(&ZeroSet::new(sp.x0().iter().copied()))?;
    println!("idempotent of C0 over F: {e:?}");

    print!(
        "generator matrix of C0:\n{}",
        codes.c0.generator().to_matrix_file()
    );

    let moved: Vec<Vec<u32>> = codes
        .c0
        .generator()
        .matrix()
        .row_iter()
        .map(|row| alg.mu_action(-(q as i64), row))
        .collect::<Result<_, _>>()?;
    let moved = GeneratorMatrix::new(alg.tower().f().clone(), Matrix::from_rows(&moved, alg.n()));
    println!(
        "mu_(-2)(C0) = C1: {}",
        moved.same_row_space(codes.c1.generator())
    );
    println!(
        "dual(C0) = C0^Z: {}",
        brute_force_dual(codes.c0.generator())?.same_row_space(codes.c0z.generator())
    );

    println!(
        "weights of C0: {:?}",
        weight_enumeration(codes.c0.generator())?
    );
    println!(
        "weights of C1: {:?}",
        weight_enumeration(codes.c1.generator())?
    );
    Ok(())
}
