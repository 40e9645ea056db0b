//! Finite abelian groups in invariant-factor form, the endomorphisms
//! `tau_s(x) = s x`, and `<tau_s>`-orbit partitions.

mod orbits;
mod shape;

pub use orbits::{orbit_partition, OrbitPartition};
pub use shape::{enumerate_groups, partitions, tau_apply, GroupElement, GroupShape};
