//! Indecomposable catalogues, torsion classes and Bongartz complements.

pub mod catalogue;
pub mod decompose;
pub mod torsion;

pub use catalogue::{Catalogue, CatalogueItem, CatalogueJson, DEFAULT_MAX_COUNT, DEFAULT_MAX_DIM};
pub use decompose::{
    basic_count, decompose, decompose_grouped, describe, is_isomorphic, iso_indecomposable,
    summand_matching,
};
pub use torsion::{
    bongartz_complement, is_ext_projective_in_perp, is_tau_tilting, prop222_check, torsion_view,
    Alternative, RigidityTable, TorsionView,
};

use crate::homological::HomologicalError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TauError {
    #[error("could not decide decomposition: {0}")]
    Undecided(String),
    #[error("{what} limit of {limit} exceeded; the algebra may be representation-infinite")]
    LimitExceeded { what: &'static str, limit: usize },
    #[error("module is not τ-rigid")]
    NotTauRigid,
    #[error("catalogue is incomplete")]
    IncompleteCatalogue,
    #[error("module does not lie in the torsion class")]
    NotInTorsionClass,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error(transparent)]
    Homological(#[from] HomologicalError),
}
