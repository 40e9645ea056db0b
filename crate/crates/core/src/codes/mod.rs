//! Ideal codes in the group algebra K[G*], written over F = GF(q^2): zero
//! sets, generator matrices, Hermitian duals and the one-coordinate extension.

mod algebra;
mod code;

pub use algebra::{GroupAlgebra, SplitCodes};
pub use code::{
    brute_force_dual, is_hermitian_self_dual, is_hermitian_self_orthogonal, weight_enumeration,
    ExtendedCode, GeneratorMatrix, IdealCode, ZeroSet, WEIGHT_ENUMERATION_LIMIT,
};
