use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not unimodular")]
    NotUnimodular,

    #[error("automorphism does not satisfy sigma^{order} = 1")]
    WrongOrder { order: u64 },

    #[error("invalid local field: {0}")]
    InvalidField(String),

    #[error("invalid datum: {0}")]
    InvalidDatum(String),

    #[error("vector {0:?} is not in the lattice")]
    NotInLattice(Vec<i64>),

    #[error("element is not in the subgroup")]
    NotInSubgroup,

    #[error("pairing is not alternating and nondegenerate: {0}")]
    DegeneratePairing(String),

    #[error("character is not genuine: {0}")]
    NotGenuine(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("missing input: {0}")]
    MissingInput(String),

    #[error("integer overflow: {0}")]
    Overflow(String),

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
