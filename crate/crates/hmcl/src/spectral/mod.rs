//! Bar resolutions, group (co)homology, the Cartan-Leray double complex of
//! a Galois covering, spectral-sequence pages, and the degree-one
//! embedding/rank-bound verifications.

mod bar;
mod double;
mod pages;
mod verify;

pub use bar::{bar_resolution, group_cohomology, group_homology, BarResolution};
pub use double::{cartan_leray_double_complex, DoubleComplex};
pub use pages::{abutment_dims, spectral_pages, Filtration, PageEntry, SSPage, SpectralSequence};
pub use verify::{
    cohomological_page_dims, cover_cohomology_modules, hom_to_field_dim, maschke_compare,
    presentation_rank, verify_hom_embedding, verify_rank_bound, EmbeddingReport, MaschkeDegree,
    MaschkeReport, RankBoundReport, SplittingReport,
};

/// Errors from spectral-sequence constructions and the theorem checks.
#[derive(Debug, Clone, PartialEq)]
pub enum SpectralError {
    /// Double complex axioms fail (squares or anticommutation).
    BadBicomplex(String),
    /// The requested page needs data outside the truncation.
    TruncationTooSmall { r: usize, p_max: usize, q_max: usize },
    /// A theorem's hypothesis fails (with a diagnostic).
    Hypothesis(String),
    Covering(crate::covering::CoveringError),
}

impl std::fmt::Display for SpectralError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpectralError::BadBicomplex(s) => write!(f, "not a double complex: {s}"),
            SpectralError::TruncationTooSmall { r, p_max, q_max } => {
                write!(f, "page {r} is unreliable everywhere at truncation ({p_max},{q_max})")
            }
            SpectralError::Hypothesis(s) => write!(f, "hypothesis fails: {s}"),
            SpectralError::Covering(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SpectralError {}

impl From<crate::covering::CoveringError> for SpectralError {
    fn from(e: crate::covering::CoveringError) -> Self {
        SpectralError::Covering(e)
    }
}
