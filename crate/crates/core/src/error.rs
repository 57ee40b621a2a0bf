//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors produced by construction, validation and query operations.
///
/// Hyperplane indices stored in error variants are 0-based, like the rest of
/// the library API.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two objects that must live in the same space do not.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A square-matrix operation was invoked on a rectangular matrix.
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },

    /// A rational literal could not be parsed.
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    /// A normal vector of the input arrangement is zero.
    #[error("normal {0} is the zero vector")]
    ZeroNormal(usize),

    /// Some k normals of the input are linearly dependent, so the input is
    /// not a central generic arrangement. Carries the first offending subset
    /// in lexicographic order.
    #[error("not generic: normals {0:?} are linearly dependent")]
    NotGeneric(Vec<usize>),

    /// A stated precondition of an operation does not hold for the inputs.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The translate does not realize the vertex of the given member.
    #[error("member {0} has no common point under this translate")]
    MissingVertex(usize),

    /// Every translate shared by the requested family is a central one, so
    /// no non-central witness exists.
    #[error("every common translate is central")]
    OnlyCentral,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn dim(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
