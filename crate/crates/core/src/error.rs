use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("effective rank {0} has no closed presentation; use the structure-constant table")]
    RankTooHigh(usize),

    #[error("cocharacter {0:?} does not annihilate the multiplicative weights")]
    OutsideKernel(Vec<i64>),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("inconsistent chain: {0}")]
    InconsistentChain(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("brane index {index} out of range for a diagram with {len} branes")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("branes at {0} and the next position have the same type")]
    SameTypePair(usize),

    #[error("move is not admissible: middle segment would become {0}")]
    NonAdmissible(i64),

    #[error("unsupported diagram: {0}")]
    UnsupportedDiagram(String),

    #[error("group mismatch: {0} vs {1}")]
    GroupMismatch(String, String),

    #[error("no known S-dual for {0}")]
    NoKnownDual(String),

    #[error("unknown Coulomb branch dimension for {0}")]
    UnknownCoulombDimension(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
