//! Exact scalar arithmetic for the Yang-Baxter planar algebra tower.
//!
//! The universal scalar is [`FieldElem`], a reduced fraction of Laurent
//! polynomials in `q` with Gaussian rational coefficients. Root-of-unity
//! specializations `q = exp(i pi / (2N+2))` land in [`CycloElem`], the
//! cyclotomic field of order `4N+4` in the power basis. Sign and positivity
//! questions about real cyclotomic numbers are settled by [`ball`] interval
//! arithmetic with exact zero tests.

pub mod ball;
pub mod cyclo;
pub mod field;
pub mod gaussrat;
pub mod laurent;
pub mod linalg;
pub mod params;
pub mod text;

pub use cyclo::CycloElem;
pub use field::FieldElem;
pub use gaussrat::GaussRat;
pub use laurent::Laurent;
pub use params::{qint, Params};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at root of unity (order {order})")]
    PoleAtRootOfUnity { order: u64 },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, ExactError>;
