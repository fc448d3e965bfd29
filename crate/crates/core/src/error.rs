use thiserror::Error;

/// Errors raised by the library.
///
/// `Internal` marks a broken invariant that the combinatorics guarantees; it
/// is reported loudly instead of being hidden.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("invalid root system {lie_type}{rank}: {reason}")]
    InvalidType {
        lie_type: String,
        rank: usize,
        reason: String,
    },
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("node index {index} out of range for rank {rank}")]
    NodeOutOfRange { index: usize, rank: usize },
    #[error("not a root: {0:?}")]
    NotARoot(Vec<i32>),
    #[error("simple reflection index {index} out of range for rank {rank}")]
    BadReflection { index: usize, rank: usize },
    #[error("Weyl group of order {order} exceeds the enumeration cap {cap}")]
    TooLarge { order: u128, cap: u128 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("refused: {0}")]
    Refused(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = LieError> = std::result::Result<T, E>;
