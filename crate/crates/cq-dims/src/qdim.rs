//! The hook-length trace formula: the quantum dimension of the irreducible
//! indexed by `lambda` is the product over cells of
//! `i (q^h + q^{-h}) / (q^h - q^{-h})`, which at `q = exp(i theta)` is the
//! product of `cot(h(c) theta)`.

use cq_exact::cyclo::specialize;
use cq_exact::{CycloElem, FieldElem, Result};
use cq_young::{Cell, YoungDiagram};
use std::collections::BTreeMap;

/// Quantum dimension over the function field.
pub fn qdim(lambda: &YoungDiagram) -> FieldElem {
    let i = FieldElem::i();
    let mut acc = FieldElem::one();
    for (_, h) in lambda.hooks() {
        let h = h as i64;
        let plus = &FieldElem::q_pow(h) + &FieldElem::q_pow(-h);
        let minus = &FieldElem::q_pow(h) - &FieldElem::q_pow(-h);
        acc = &acc * &(&(&i * &plus) / &minus);
    }
    acc
}

/// Quantum dimension specialized at level `N`; zero exactly on the boundary
/// diagrams with corner hook `N+1`.
pub fn qdim_at(lambda: &YoungDiagram, n_level: u32) -> Result<CycloElem> {
    specialize(&qdim(lambda), n_level)
}

/// The Murphy eigenvalue of a cell: `q^{2 cn(c)}`.
pub fn cell_eig(c: Cell) -> FieldElem {
    FieldElem::q_pow(2 * YoungDiagram::content(c))
}

/// Dimension table keyed by diagram, generic plus optional specialization.
#[derive(Clone, Debug)]
pub struct DimTable {
    pub entries: BTreeMap<YoungDiagram, FieldElem>,
}

impl DimTable {
    /// Table for all diagrams with at most `max_cells` cells, restricted to
    /// corner hook at most `n_level` when given.
    pub fn up_to(max_cells: u32, n_level: Option<u32>) -> Self {
        let mut entries = BTreeMap::new();
        for n in 0..=max_cells {
            for d in YoungDiagram::partitions_of(n) {
                if let Some(nl) = n_level {
                    if d.corner_hook() > nl {
                        continue;
                    }
                }
                entries.insert(d.clone(), qdim(&d));
            }
        }
        DimTable { entries }
    }
}
