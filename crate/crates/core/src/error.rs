use thiserror::Error;

/// Errors raised by the library. Every variant describes a caller-side
/// problem except [`Error::Internal`], which signals a broken invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input (bad window, missing assignment, precondition violated).
    #[error("invalid input: {0}")]
    Input(String),
    /// Parameter outside the range where the object is defined.
    #[error("domain error: {0}")]
    Domain(String),
    /// A polynomial that was required to be symmetric is not.
    #[error("polynomial is not symmetric about degree {center}")]
    NotSymmetric { center: usize },
    /// A sub-diagram could not be recognized as a finite Coxeter graph.
    #[error("classification failed: {0}")]
    Classification(String),
    /// Operation is not available for the requested family.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// An exact computation produced a value that should be impossible.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
