use alloc::string::String;

/// Errors raised by the exact-arithmetic and lattice-order operations.
///
/// Witness values are carried as their canonical text encodings so that the
/// error type stays independent of the coefficient ring. Indices in messages
/// are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(&'static str),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index ({row}, {col}) out of range for dimension {n}")]
    IndexOutOfRange { row: usize, col: usize, n: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("determinant {det} is not a unit of the ring")]
    NotAUnit { det: String },

    #[error("entry ({row}, {col}) = {value} is negative")]
    NegativeEntry { row: usize, col: usize, value: String },

    #[error("{0} is singular")]
    NotInvertible(&'static str),

    #[error("basis matrices are linearly dependent")]
    NotABasis,

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("identity is not positive: coefficient k({i}, {j}) = {value} is not in R+")]
    IdentityNotPositive { i: usize, j: usize, value: String },

    #[error("assertion failed: {0}")]
    AssertionFailed(String),

    #[error("D is not one of the normal forms I, [[1,1],[1,0]], [[1,1],[a,b]] with a > b > 0")]
    UnrecognizedD,

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("internal check failed: {0}")]
    InternalCheckFailed(String),

    #[error("no valid sample found after {0} attempts")]
    ResourceExhausted(usize),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
