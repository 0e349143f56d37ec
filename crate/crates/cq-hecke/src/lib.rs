//! The Hecke algebra of type A over Q(i)(q) with the braid parameter tied to
//! `r = i q^{-1}`: permutation-basis multiplication, symmetrizers, Young
//! idempotents, branch morphisms and the Murphy operator. Independent of the
//! diagrammatic evaluation engine.

pub mod branch;
pub mod dsl;
pub mod elem;
pub mod murphy;
pub mod perm;
pub mod symmetrizer;
pub mod young_idem;

pub use branch::{branch, branching_sum, included_idempotent, BranchMorphism};
pub use elem::{HeckeElem, HeckeError};
pub use murphy::murphy;
pub use perm::Perm;
pub use symmetrizer::{symmetrizer, symmetrizer_alt, SymKind};
pub use young_idem::{young_idempotent, YoungIdem};
