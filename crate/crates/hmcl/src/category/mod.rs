//! Finite `k`-linear categories with chosen bases.
//!
//! Categories are built from quiver-with-relations presentations (or from a
//! flat algebra with a complete system of orthogonal idempotents), carry
//! explicit structure constants for composition, and are validated
//! exhaustively at construction: associativity and the unit axioms are
//! checked on every basis pair and triple.

mod algebra;
mod functor;
mod linear;
mod presented;
mod quiver;

pub use algebra::FlatAlgebra;
pub use functor::LinearFunctor;
pub use linear::{CategoryProperties, LinearCategory};
pub use presented::PresentedCategory;
pub use quiver::{Arrow, QuiverPresentation, Relation};

/// Errors from category construction and the structural operations.
#[derive(Debug, Clone, PartialEq)]
pub enum CategoryError {
    UnknownVertex(String),
    UnknownArrow(String),
    DuplicateName(String),
    /// A relation mixes paths with different endpoints.
    NonParallelRelation(String),
    /// A relation contains a path whose arrows do not chain.
    NonComposablePath(String),
    /// The quiver has an oriented cycle but no nilpotence bound.
    CyclicWithoutBound,
    /// Associativity or a unit axiom failed on concrete basis elements.
    InvalidStructure(String),
    /// A proposed system of idempotents is not orthogonal/complete.
    IdempotentAxiom(String),
    /// An object set argument is not a subset of the category's objects.
    BadObjectSubset(String),
    /// Scalars or shapes incompatible with the category's field.
    Field(crate::linalg::LinAlgError),
}

impl std::fmt::Display for CategoryError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CategoryError::UnknownVertex(v) => write!(f, "unknown vertex `{v}`"),
            CategoryError::UnknownArrow(a) => write!(f, "unknown arrow `{a}`"),
            CategoryError::DuplicateName(n) => write!(f, "duplicate name `{n}`"),
            CategoryError::NonParallelRelation(r) => write!(f, "relation paths are not parallel: {r}"),
            CategoryError::NonComposablePath(p) => write!(f, "path does not compose: {p}"),
            CategoryError::CyclicWithoutBound => {
                write!(f, "quiver has an oriented cycle; a nilpotence bound is required")
            }
            CategoryError::InvalidStructure(s) => write!(f, "invalid category structure: {s}"),
            CategoryError::IdempotentAxiom(s) => write!(f, "idempotent axioms fail: {s}"),
            CategoryError::BadObjectSubset(s) => write!(f, "bad object subset: {s}"),
            CategoryError::Field(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CategoryError {}

impl From<crate::linalg::LinAlgError> for CategoryError {
    fn from(e: crate::linalg::LinAlgError) -> Self {
        CategoryError::Field(e)
    }
}
