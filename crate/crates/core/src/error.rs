use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable sets differ: {0} vs {1}")]
    VarMismatch(String, String),

    #[error("unnormalized input: half-integer power of {0} remains")]
    Unnormalized(String),

    #[error("lock-count mismatch: half-integer power of {0} remains after normalization")]
    LockCountMismatch(String),

    #[error("inconsistent W: odd power of (-q)^(1/2) remains after normalization")]
    InconsistentWrithe,

    #[error("pole: {0}")]
    Pole(String),

    #[error("matrix is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),

    #[error("matrix is not square")]
    NotSquare,

    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("expected distinct indices, got ({0}, {0})")]
    SameIndex(usize),

    #[error("transformation III needs a diagonal matrix")]
    NotDiagonal,

    #[error("unreduced matrix row {0} does not sum to zero")]
    RowSum(usize),

    #[error("no closed form for {0}")]
    NoClosedForm(String),

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("{0} and {1} are not coprime")]
    NotCoprime(i64, i64),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("size limit exceeded: {what} has {size}, limit {limit}")]
    SizeLimit { what: &'static str, size: usize, limit: usize },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid input: {0}")]
    Input(String),
}
