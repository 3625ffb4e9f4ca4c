use thiserror::Error;

use crate::relation::QuasiorderViolation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe must contain at least one element")]
    EmptyUniverse,
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("index {index} out of range for universe of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("subset sized for {found} elements, expected {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("relations are defined on different universes")]
    UniverseMismatch,
    #[error("not a quasiorder: {0}")]
    NotQuasiorder(QuasiorderViolation),
    #[error("not an equivalence relation")]
    NotEquivalence,
    #[error("not a partial order")]
    NotPartialOrder,
    #[error("universe size {size} exceeds enumeration cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("operation requires an up-set (T▼) topology")]
    WrongTopologyKind,
    #[error("subset {0} is not a connected component")]
    NotAComponent(String),
    #[error("invalid component cover: {0}")]
    InvalidCover(String),
    #[error("cofinal split precondition fails at element {element}: {reason}")]
    CofinalPrecondition { element: usize, reason: &'static str },
}
