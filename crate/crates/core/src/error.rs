use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymclassError {
    #[error("group parameter mismatch: T_{{4*{left}}} vs T_{{4*{right}}}")]
    GroupMismatch { left: u32, right: u32 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("entry {entry} at position {position} is outside 1..={dim}")]
    EntryOutOfRange { position: usize, entry: u32, dim: u32 },
    #[error("cannot combine a monomial vector with a tensor vector")]
    BasisKindMismatch,
    #[error("character {0} is not defined on the whole group")]
    NotOrdinary(String),
    #[error("formula value {0} is not a non-negative integer")]
    NonInteger(String),
    #[error("degree {degree} too small to build a multi-index with trivial stabilizer (need at least {needed})")]
    DegreeTooSmall { degree: u32, needed: u32 },
    #[error("parameter point outside the hypothesis: {0}")]
    OutOfHypothesis(String),
    #[error("work ceiling exceeded at {point}: {units} units > {ceiling}")]
    WorkCeiling { point: String, units: u128, ceiling: u128 },
    #[error("oracle disagreement: {0}")]
    OracleMismatch(String),
}

pub type Result<T> = std::result::Result<T, SymclassError>;
