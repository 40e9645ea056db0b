//! Exact arithmetic in the tower F_p < F_q < F = F_{q^2} < K.

mod gf;
pub mod poly;
mod tower;

pub use gf::{GaloisField, MAX_ORDER};
pub use tower::{FieldElement, FieldTower, Level};
