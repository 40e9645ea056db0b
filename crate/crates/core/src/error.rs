use thiserror::Error;

/// Errors surfaced by every layer of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("gcd({n}, {q}) = {gcd} != 1")]
    NotCoprime { n: u64, q: u64, gcd: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("field of order {p}^{degree} exceeds the supported size")]
    FieldTooLarge { p: u32, degree: usize },
    #[error("element {0} does not lie in F = GF(q^2)")]
    NotInSubfield(u32),
    #[error("{n} is not invertible modulo the characteristic {p}")]
    NotInvertible { n: u64, p: u32 },
    #[error("multiplier {s} is not a unit modulo {modulus}")]
    NotAUnit { s: i64, modulus: u64 },
    #[error("malformed group spec {0:?}")]
    BadGroupSpec(String),
    #[error("zero set is not a union of <tau_(q^2)>-orbits")]
    NotOrbitUnion,
    #[error("no splitting by -q exists: {0}")]
    Obstructed(crate::splitting::Obstruction),
    #[error("gamma does not satisfy 1/n + gamma^(q+1) = 0")]
    BadGamma,
    #[error("bound {value} exceeds the supported maximum {max}")]
    BoundExceeded { value: u64, max: u64 },
    #[error("malformed matrix file: {0}")]
    BadMatrixFile(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Self::NotPrimePower(_) => "not_prime_power",
            Self::NotPrime(_) => "not_prime",
            Self::NotCoprime { .. } => "not_coprime",
            Self::InvalidArgument(_) => "invalid_argument",
            Self::FieldTooLarge { .. } => "field_too_large",
            Self::NotInSubfield(_) => "not_in_subfield",
            Self::NotInvertible { .. } => "not_invertible",
            Self::NotAUnit { .. } => "not_a_unit",
            Self::BadGroupSpec(_) => "bad_group_spec",
            Self::NotOrbitUnion => "not_orbit_union",
            Self::Obstructed(_) => "obstructed",
            Self::BadGamma => "bad_gamma",
            Self::BoundExceeded { .. } => "bound_exceeded",
            Self::BadMatrixFile(_) => "bad_matrix_file",
            Self::Internal(_) => "internal",
        }
    }
}
