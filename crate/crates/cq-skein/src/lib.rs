//! Skein-theoretic evaluation for the singly-generated Yang-Baxter planar
//! algebra: closed R-labeled diagrams and their partition function through
//! HOMFLY resolution, the word algebra with its Markov trace, Gram matrices
//! and relation certification by trace pairings.

pub mod diagram;
pub mod gram;
pub mod link;
pub mod verify;
pub mod words;
pub mod zeta;

pub use diagram::{ClosedDiagram, SkeinError};
pub use gram::{expand_over_basis, gram, gram_at};
pub use link::{homfly, OrientedLink};
pub use verify::{
    far_commutation_relations, presentation_relations, sample_words, verify_relation,
    verify_with_full_probes, verify_with_sampled_probes, Relation,
};
pub use words::{alpha, beta, canonical_words, closure, word_trace, AlgElem, Letter, Word};
pub use zeta::{disjoint_union, zeta, zeta_with_choices};
