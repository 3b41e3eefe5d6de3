use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// These are *faults*: a precondition was violated or a resource bound was
/// hit. Semantic outcomes of checkers (an axiom that does not hold, a square
/// that is not exact) are not errors; they are reported through
/// [`crate::report::Report`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("duplicate tag `{0}`")]
    DuplicateTag(String),

    #[error("mismatched boundaries: {0}")]
    MismatchedBoundaries(String),

    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),

    #[error("size guard exceeded: {0}")]
    SizeGuardExceeded(String),

    #[error("unknown object `{0}`")]
    UnknownObject(String),

    #[error("unknown morphism `{0}`")]
    UnknownMorphism(String),

    #[error("not representable at object `{0}`")]
    NotRepresentable(String),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("invalid structure: {0}")]
    InvalidStructure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
