//! Splittings `({0}, X0, X1)` of abelian groups by `-q`: the prime
//! criterion, the orbit-pairing construction and the layered product
//! construction over cyclic factors.

mod classify;
mod split;

pub use classify::{classify_prime, exists_hsd, ExistenceReport, PrimeClassification, Verdict};
pub use split::{
    build_splitting, product_splitting, q2_orbits, verify_splitting, Obstruction, Splitting,
    SplittingDefect,
};
