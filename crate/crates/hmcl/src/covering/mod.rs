//! Galois coverings: finite groups acting freely on categories, quotient
//! categories with their projection functors, the induced action on
//! Hochschild-Mitchell chains, and (co)invariant complexes.

mod action;
mod chains;
mod group;
mod kgmod;
mod quotient;

pub use action::GroupAction;
pub use chains::{
    action_on_chains, action_on_chains_with_coefficients, action_on_cochains,
    chain_coinvariants_iso_check, coinvariants_complex, homology_with_action, invariants_complex,
    kg_freeness_report, CoinvariantsDegree, CoinvariantsIsoReport, EquivariantComplex, FreenessDegree,
    FreenessReport,
};
pub use group::{FiniteGroup, GroupPresentation};
pub use kgmod::KGModule;
pub use quotient::Covering;

/// Errors from covering-theoretic constructions.
#[derive(Debug, Clone, PartialEq)]
pub enum CoveringError {
    /// Group table fails an axiom.
    BadGroup(String),
    /// The action data does not define a group action.
    BadAction(String),
    /// The action is not free on objects.
    NotFree(String),
    /// Coefficients are not fixed by the twisting action (not of the form
    /// of a lifted bimodule).
    NotLifted(String),
    /// The group action does not commute with the differential.
    NotEquivariant(usize),
    Category(crate::category::CategoryError),
}

impl std::fmt::Display for CoveringError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoveringError::BadGroup(s) => write!(f, "not a group: {s}"),
            CoveringError::BadAction(s) => write!(f, "not a group action: {s}"),
            CoveringError::NotFree(s) => write!(f, "action is not free: {s}"),
            CoveringError::NotLifted(s) => write!(f, "coefficients are not twist-fixed: {s}"),
            CoveringError::NotEquivariant(q) => {
                write!(f, "action does not commute with the differential at degree {q}")
            }
            CoveringError::Category(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CoveringError {}

impl From<crate::category::CategoryError> for CoveringError {
    fn from(e: crate::category::CategoryError) -> Self {
        CoveringError::Category(e)
    }
}
