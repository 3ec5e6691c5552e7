use thiserror::Error;

/// Errors raised by polynomial ring operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("ring mismatch: `{left}` vs `{right}`")]
    RingMismatch { left: String, right: String },
    #[error("duplicate variable `{0}` in ring signature")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("no image given for variable `{0}`")]
    MissingImage(String),
    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),
    #[error("no weight assigned to variable `{0}`")]
    MissingWeight(String),
    #[error("expected a polynomial over `{expected}`, found one over `{found}`")]
    WrongRing { expected: String, found: String },
    #[error("invalid permutation images {0:?}")]
    InvalidPermutation([u8; 3]),
}
