//! Exact dense linear algebra over `Q` and `GF(p)`.
//!
//! Everything upstream (structure constants, differentials, page
//! subquotients) is reduced to the primitives here: rank, kernels, images,
//! canonical subspaces and integer Smith normal form. All arithmetic is
//! exact; rationals are kept in lowest terms and prime-field residues in
//! `[0, p)`.

mod accum;
mod elim;
mod field;
mod intmat;
mod matrix;
mod subspace;

pub use accum::RrefAccumulator;
pub use field::{FieldSpec, Scalar};
pub use intmat::{smith_normal_form, IntMatrix};
pub use matrix::Matrix;
pub use subspace::{Subspace, SubspaceOps};

/// Errors raised by linear-algebra entry points on malformed input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    /// Operands live over different fields.
    FieldMismatch,
    /// Shapes do not line up for the requested operation.
    ShapeMismatch { expected: (usize, usize), found: (usize, usize) },
    /// The modulus is not a prime below 2^31.
    NotPrime(u64),
    /// A scalar does not belong to the declared field.
    BadScalar(String),
}

impl std::fmt::Display for LinAlgError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LinAlgError::FieldMismatch => write!(f, "operands live over different fields"),
            LinAlgError::ShapeMismatch { expected, found } => {
                write!(f, "shape mismatch: expected {}x{}, found {}x{}", expected.0, expected.1, found.0, found.1)
            }
            LinAlgError::NotPrime(p) => write!(f, "{p} is not a prime below 2^31"),
            LinAlgError::BadScalar(s) => write!(f, "scalar {s} does not belong to the field"),
        }
    }
}

impl std::error::Error for LinAlgError {}
