//! Hermitian self-dual extended abelian group codes over F_{q^2}.
//!
//! The crate builds split group codes from splittings of finite abelian
//! groups by `-q`, extends them by the `gamma` column, checks Hermitian
//! self-duality against brute-force linear algebra, and counts the abelian
//! groups of order at most `x` that admit such codes.
//!
//! Layers, bottom up:
//!
//! - [`field`]: the tower F_p < F_q < F_{q^2} < K.
//! - [`group`]: abelian groups in invariant-factor form, `tau_s`, orbits.
//! - [`splitting`]: existence and construction of splittings by `-q`.
//! - [`codes`]: ideal codes as explicit generator matrices, duals, extensions.
//! - [`counting`]: `a(n)`, `P(k)`, densities, `HSD(x)` and friends.
//! - [`cli`]: the command-line front end and the end-to-end pipeline.

pub mod arith;
pub mod cli;
pub mod codes;
pub mod counting;
mod error;
pub mod field;
pub mod group;
pub mod linalg;
pub mod splitting;

pub use error::{Error, Result};
