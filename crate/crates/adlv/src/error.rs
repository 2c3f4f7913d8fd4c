use thiserror::Error;

/// Errors surfaced by the library.
///
/// `ConsistencyFailure` is reserved for situations that should be impossible
/// if the underlying mathematics is right; hitting one is a bug report, not
/// a usage problem, and the CLI maps it to its own exit code.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid type: {0}")]
    InvalidType(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("node index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("invalid Levi subset: {0}")]
    InvalidLevi(String),

    #[error("vector is not in the required lattice: {0}")]
    NotInLattice(String),

    #[error("weight is not dominant: {0}")]
    NotDominant(String),

    #[error("lattice classes live in different quotients: {0} vs {1}")]
    MismatchedQuotients(String, String),

    #[error("cutoff condition fails: pairing with positive coroot {coroot} is {value} < -1")]
    CutoffViolation { coroot: String, value: String },

    #[error("{0}")]
    ChamberViolation(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency failure: {0}")]
    ConsistencyFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
