use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Integer arithmetic left the range of the coefficient type.
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("not a rank tuple for w: {0}")]
    NotRankTuple(String),

    #[error("stratum is not sparse: omega = {0:?}")]
    NotSparse(Vec<usize>),

    #[error("invalid stalk point: {0}")]
    InvalidStalkPoint(String),

    #[error("invalid interval U[{i},{j}]")]
    InvalidInterval { i: usize, j: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    /// Input exceeds a configured enumeration cap.
    #[error("total multiplicity {total} exceeds cap {cap}")]
    CapExceeded { total: u64, cap: u64 },

    /// An internal consistency check failed; this means a formula or a
    /// predicate disagrees with the structure it is supposed to describe.
    #[error("consistency failure: {0}")]
    Consistency(String),
}
