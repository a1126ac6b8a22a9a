use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows} rows, row {row} has {len} entries)")]
    NotSquare { rows: usize, row: usize, len: usize },

    #[error("matrix is empty")]
    Empty,

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix is not positive definite: leading principal minor {minor} is not positive")]
    NotPositiveDefinite { minor: usize },

    #[error("unknown catalog lattice `{0}`")]
    UnknownLattice(String),

    #[error("vector must be nonzero")]
    ZeroVector,

    #[error("enumeration budget of {limit} points exceeded")]
    BudgetExceeded { limit: u64 },

    #[error("wall-clock cap of {seconds} s exceeded")]
    TimeCapExceeded { seconds: u64 },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("rank {rank} exceeds the exact-decision bound {max}; compare invariants instead")]
    RankTooLarge { rank: usize, max: usize },

    #[error("spectra are not comparable: {0}")]
    CutoffMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("integer overflow: {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
