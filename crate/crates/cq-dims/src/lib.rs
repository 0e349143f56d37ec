//! Quantum dimensions of the minimal idempotents and the central generating
//! function `Z(mu, u)` of Murphy-operator moments, with the residue formula
//! that recovers dimension ratios as an independent route.

pub mod qdim;
pub mod zfun;

pub use qdim::{cell_eig, qdim, qdim_at, DimTable};
pub use zfun::{dim_ratio_by_residue, z_closed, z_transfer, ZFunction};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimsError {
    #[error("residue pole of order > 1 at the requested eigenvalue")]
    RepeatedPole,
    #[error("cell {0:?} cannot be added to the diagram")]
    InvalidCellAddition(cq_young::Cell),
    #[error(transparent)]
    Exact(#[from] cq_exact::ExactError),
}
