use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// `ConstructionBroken` is never a user error: it means one of the exact
/// identities the construction relies on failed, which points at a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("root system is not of finite type (more than {0} roots generated)")]
    NotFiniteType(usize),
    #[error("unknown root {0:?}")]
    UnknownRoot(Vec<i64>),
    #[error("root string through a proportional root is undefined")]
    DegenerateString,
    #[error("simple index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operands belong to different rings ({0} vs {1})")]
    MixedRings(String, String),
    #[error("element {0} is not invertible")]
    NotInvertible(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse ring element {0:?}")]
    ParseElem(String),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("construction broken: {0}")]
    ConstructionBroken(String),
    #[error("invalid sign function: {0}")]
    InvalidSign(String),
    #[error("Dynkin diagram admits no proper 2-coloring")]
    ImpossibleColoring,
    #[error("unsupported type: {0}")]
    UnsupportedType(String),
    #[error("root-space decomposition incomplete: weight spaces sum to {found}, closure has dimension {expected}")]
    IncompleteDecomposition { expected: usize, found: usize },
    #[error("zero start vector")]
    ZeroVector,
    #[error("group enumeration exceeded cap after {partial} elements")]
    CapExceeded { partial: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
